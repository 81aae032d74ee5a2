#include "coxcat/noncross.hpp"

#include "doctest.h"
#include "oracle_typeA.hpp"

using namespace coxcat;

namespace {

struct Ctx {
  CoxeterSystem sys;
  SubSystem full;
  FlatTable flats;
  NCLattice nc;
  explicit Ctx(const char* name)
      : sys(CoxeterSystem::fromString(name)),
        full((sys.enumerate(), SubSystem::full(sys))),
        flats(full),
        nc(full, flats) {}
};

/// Partition of n+1 given by the block sizes of a type-A parabolic type.
std::vector<int> blockSizes(const CoxeterType& t, int nPlus1) {
  std::vector<int> parts;
  int used = 0;
  for (const auto& f : t.factors) {
    parts.push_back(f.rank + 1);
    used += f.rank + 1;
  }
  for (; used < nPlus1; ++used) parts.push_back(1);
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

TEST_CASE("noncrossing partition counts") {
  CHECK(Ctx("A1").nc.size() == 2);
  CHECK(Ctx("A2").nc.size() == 5);
  CHECK(Ctx("B2").nc.size() == 6);
  CHECK(Ctx("A3").nc.size() == 14);
  CHECK(Ctx("H3").nc.size() == 32);
  CHECK(Ctx("F4").nc.size() == 105);
  CHECK(Ctx("B2xA1").nc.size() == 12);
}

TEST_CASE("canonical factorizations") {
  Ctx a2("A2");
  const CoxeterSystem& W = a2.sys;
  int e = a2.nc.indexOf(W.identity());
  CHECK(a2.nc.canonicalFactorization(e).empty());
  int cIdx = a2.nc.indexOf(W.coxeter());
  auto cf = a2.nc.canonicalFactorization(cIdx);
  REQUIRE(cf.size() == 2);
  CHECK(W.productOfReflections(cf) == W.coxeter());
  // Factors of c are the simple reflections.
  for (int r : cf) CHECK(W.simpleIndexOfRoot(r) >= 0);
  // Every noncrossing partition: product check and parabolic-simple check.
  for (const char* name : {"A3", "B3", "I2(7)"}) {
    Ctx c(name);
    for (int i = 0; i < c.nc.size(); ++i) {
      auto f = c.nc.canonicalFactorization(i);
      CHECK(int(f.size()) == c.nc.length(i));
      CHECK(c.sys.productOfReflections(f) == c.nc.elem(i));
    }
  }
}

TEST_CASE("subword and full-support orders on A2") {
  Ctx a2("A2");
  const CoxeterSystem& W = a2.sys;
  int e = a2.nc.indexOf(W.identity());
  int s1 = a2.nc.indexOf(W.simple(0));
  int c = a2.nc.indexOf(W.coxeter());
  int s1s2s1 = a2.nc.indexOf(W.mul(W.mul(W.simple(0), W.simple(1)), W.simple(0)));
  CHECK(a2.nc.subword(s1, c));
  CHECK(!a2.nc.subword(s1s2s1, c));
  CHECK(a2.nc.fullBelow(s1s2s1, c));
  CHECK(!a2.nc.fullBelow(e, c));
  CHECK(a2.nc.leq(s1s2s1, c));

  CHECK(a2.nc.uniqueMiddle(e, c) == e);
  CHECK(a2.nc.uniqueMiddle(s1s2s1, c) == c);
  CHECK(a2.nc.uniqueMiddle(s1, c) == s1);
}

TEST_CASE("structural properties of the two orders") {
  for (const char* name : {"A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(8)", "B2xA1"}) {
    CAPTURE(name);
    Ctx c(name);
    CHECK(c.nc.booleanIntervalCheck());
    CHECK(c.nc.uniqueMiddleCheck());
    CHECK(c.nc.krewerasCheck());
  }
}

TEST_CASE("kreweras complement on A2") {
  Ctx a2("A2");
  const CoxeterSystem& W = a2.sys;
  CHECK(a2.nc.elem(a2.nc.kreweras(a2.nc.indexOf(W.identity()))) == W.coxeter());
  CHECK(a2.nc.elem(a2.nc.kreweras(a2.nc.indexOf(W.coxeter()))) == W.identity());
  int refl = a2.nc.indexOf(W.simple(0));
  CHECK(a2.nc.length(a2.nc.kreweras(refl)) == 1);
}

TEST_CASE("kappa censuses against closed forms") {
  // Theorems: kappa = p_X(mh+1)/[N:W_X], kappa+ = p_X(mh-1)/[N:W_X].
  for (const char* name : {"A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(7)", "D4"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 3; ++m) {
      auto kappa = c.nc.kappaCensus(m);
      auto kappaP = c.nc.kappaPlusCensus(m);
      for (int k = 0; k < c.flats.numOrbits(); ++k) {
        CHECK(Rational(kappa[k]) == c.flats.kappaClosedPoly(k).eval(m));
        CHECK(Rational(kappaP[k]) == c.flats.kappaPlusClosedPoly(k).eval(m));
        CHECK(Rational(kappa[k]) == c.nc.kappaPoly(k).eval(m));
      }
    }
  }
}

TEST_CASE("kappa values on A2") {
  Ctx a2("A2");
  auto kappa1 = a2.nc.kappaCensus(1);
  // Orbits in dim-ascending order: Coxeter class, A1 class, full space.
  CHECK(kappa1 == std::vector<Int>{1, 3, 1});
  auto kappa2 = a2.nc.kappaCensus(2);
  CHECK(kappa2 == std::vector<Int>{1, 6, 5});
  auto kp1 = a2.nc.kappaPlusCensus(1);
  CHECK(kp1 == std::vector<Int>{1, 1, 0});
  // kappa(A2, A1 orbit, -) = 3m as a polynomial.
  int a1orb = 1;
  CHECK(a2.nc.kappaPoly(a1orb) == UniPoly(Var::m, {Rational(0), Rational(3)}));
}

TEST_CASE("type A oracle: chain counts by class") {
  for (int n : {2, 3}) {
    CoxeterSystem sys(CoxeterType{{{'A', n, 0}}});
    sys.enumerate();
    SubSystem full = SubSystem::full(sys);
    FlatTable flats(full);
    NCLattice nc(full, flats);
    for (int m = 1; m <= 3; ++m) {
      auto kappa = nc.kappaCensus(m);
      for (int k = 0; k < flats.numOrbits(); ++k) {
        long oracle = oracleA::countChains(n + 1, m, blockSizes(flats.orbitType(k), n + 1));
        CHECK(kappa[k] == oracle);
      }
    }
  }
}

TEST_CASE("Narayana census and column sums") {
  for (const char* name : {"A3", "B3", "H3"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 3; ++m) {
      auto nar = c.nc.narayanaCensus(m);
      auto kappa = c.nc.kappaCensus(m);
      // Nar(W, k) = sum of kappa over orbits with dim = n - k.
      int n = c.sys.rank();
      for (int k = 0; k <= n; ++k) {
        Int sum = 0;
        for (int orb = 0; orb < c.flats.numOrbits(); ++orb)
          if (c.flats.orbitDim(orb) == n - k) sum += kappa[orb];
        CHECK(sum == nar[k]);
      }
      // Total = Fuss-Catalan.
      Int total = 0;
      for (const Int& x : nar) total += x;
      CHECK(Rational(total) == c.sys.type().catalan(m));
      auto narP = c.nc.narayanaPlusCensus(m);
      Int totalP = 0;
      for (const Int& x : narP) totalP += x;
      CHECK(Rational(totalP) == c.sys.type().catalanPlus(m));
    }
  }
  CHECK(Ctx("A2").nc.narayanaCensus(1) == std::vector<Int>{1, 3, 1});
}

TEST_CASE("Fuss-Catalan reciprocity as polynomials") {
  for (const char* name : {"A2", "A4", "B3", "H3", "I2(9)", "F4"}) {
    CoxeterType t = CoxeterType::parse(name);
    UniPoly lhs = t.catalanPoly().negateVariable();  // Cat^(-m)
    UniPoly rhs = t.catalanPlusPoly().compose(UniPoly(Var::m, {Rational(-1), Rational(1)}));
    if (t.rank() % 2 != 0) rhs.scale(Rational(-1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("theta matrices on A2") {
  Ctx a2("A2");
  ThetaMatrices tm = ThetaMatrices::build(a2.nc);
  CHECK(tm.Q == std::vector<std::vector<Int>>{{1, 0, 0}, {3, 1, 0}, {1, 1, 1}});
  CHECK(tm.N == std::vector<std::vector<Int>>{{1, 0, 0}, {2, 1, 0}, {1, 1, 1}});
  CHECK(tm.R == std::vector<std::vector<Int>>{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(tm.D == std::vector<Int>{1, -1, 1});
  CHECK(tm.U == std::vector<Int>{1, 0, 0});
}

TEST_CASE("matrix identities") {
  for (const char* name : {"A2", "A3", "B2", "B3", "D4", "H3", "I2(6)", "I2(7)", "F4"}) {
    CAPTURE(name);
    Ctx c(name);
    ThetaMatrices tm = ThetaMatrices::build(c.nc);
    int K = c.flats.numOrbits();
    std::vector<std::vector<Int>> I(K, std::vector<Int>(K, Int(0)));
    for (int i = 0; i < K; ++i) I[i][i] = 1;
    auto DN = tm.scaledByD(tm.N, true);
    CHECK(ThetaMatrices::mul(DN, DN) == I);
    CHECK(ThetaMatrices::mul(tm.R, tm.N) == tm.Q);
    // Q^-1 = (DN) Q (DN): equivalently (DN) Q (DN) Q = I.
    auto QInvCandidate = ThetaMatrices::mul(ThetaMatrices::mul(DN, tm.Q), DN);
    CHECK(ThetaMatrices::mul(QInvCandidate, tm.Q) == I);
    // R = Q D N D.
    CHECK(tm.R == ThetaMatrices::mul(tm.Q, tm.scaledByD(tm.scaledByD(tm.N, true), false)));
    // Unitriangularity in the dim-ascending order.
    for (int i = 0; i < K; ++i) {
      CHECK(tm.Q[i][i] == 1);
      for (int j = i + 1; j < K; ++j) {
        CHECK(tm.Q[i][j] == 0);
        CHECK(tm.R[i][j] == 0);
        CHECK(tm.N[i][j] == 0);
      }
    }
    // park = Q^m U and park' = Q^(m-1) R U match the chain censuses.
    for (int m = 1; m <= 3; ++m) {
      CHECK(tm.parkVector(m) == c.nc.kappaCensus(m));
      CHECK(tm.parkPrimeVector(m) == c.nc.kappaPlusCensus(m));
    }
  }
}

TEST_CASE("noncrossing lattice for nonbipartite Coxeter elements") {
  Ctx a3("A3");
  // c2 = s1 s2 s3 in ascending order; differs from the bipartite element.
  ElemId c2 = a3.sys.identity();
  for (int j = 0; j < 3; ++j) c2 = a3.sys.mul(c2, a3.sys.simple(j));
  NCLattice nc2(a3.full, a3.flats, c2);
  CHECK(nc2.size() == 14);
  CHECK(nc2.kappaCensus(2) == a3.nc.kappaCensus(2));
}
