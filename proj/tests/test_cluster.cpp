#include "coxcat/bijection.hpp"
#include "coxcat/cluster.hpp"

#include "doctest.h"

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

}  // namespace

TEST_CASE("pentagon: the cluster complex of A2") {
  Ctx a2("A2");
  ClusterComplex cc(a2.full, a2.flats, 1);
  CHECK(cc.numVertices() == 5);
  CHECK(cc.fVector() == std::vector<Int>{1, 5, 5});
  CHECK(cc.fPlusVector() == std::vector<Int>{1, 3, 2});
  CHECK(cc.facetCount() == 5);
  CHECK(cc.positiveFacetCount() == 2);
  // gamma over (Coxeter class, A1 class, full space): empty face is the only
  // one labelled by the Coxeter class.
  CHECK(cc.gammaCensus() == std::vector<Int>{1, 5, 5});
  CHECK(cc.gammaPlusCensus() == std::vector<Int>{1, 3, 2});
  // h-vector (1,3,1).
  auto h = ClusterComplex::hFromF(cc.fVector());
  CHECK(h == std::vector<Rational>{1, 3, 1});
  auto hp = ClusterComplex::hFromF(cc.fPlusVector());
  CHECK(hp == std::vector<Rational>{1, 1, 0});
}

TEST_CASE("rotation case analysis on A2") {
  Ctx a2("A2");
  ClusterComplex cc(a2.full, a2.flats, 2);
  const CoxeterSystem& W = a2.sys;
  // Positive root with color 1 -> same root, color 2.
  int alpha1 = W.simpleRoot(0);
  int v = cc.vertexIndex({alpha1, 1});
  REQUIRE(v >= 0);
  CHECK(cc.vertex(cc.rotate(v)) == ColoredRoot{alpha1, 2});
  // Negative simple of S+ -> the positive simple with color 1.
  int neg = cc.vertexIndex({W.negate(alpha1), 1});
  REQUIRE(neg >= 0);
  CHECK(cc.vertex(cc.rotate(neg)) == ColoredRoot{alpha1, 1});
}

TEST_CASE("facet counts across groups and m") {
  for (const char* name : {"A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(7)", "D4"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 3; ++m) {
      ClusterComplex cc(c.full, c.flats, m);
      CHECK(Rational(cc.facetCount()) == c.sys.type().catalan(m));
      CHECK(Rational(cc.positiveFacetCount()) == c.sys.type().catalanPlus(m));
    }
  }
  // Spot value: #facets of Upsilon(B2, 2) = 15.
  Ctx b2("B2");
  CHECK(ClusterComplex(b2.full, b2.flats, 2).facetCount() == 15);
}

TEST_CASE("gamma census equals the characteristic-polynomial formula") {
  for (const char* name : {"A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(8)", "D4", "F4"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= (std::string(name) == "F4" ? 2 : 3); ++m) {
      ClusterComplex cc(c.full, c.flats, m);
      auto gamma = cc.gammaCensus();
      auto gammaP = cc.gammaPlusCensus();
      for (int k = 0; k < c.flats.numOrbits(); ++k) {
        CHECK(Rational(gamma[k]) == c.flats.gammaClosedPoly(k).eval(m));
        CHECK(Rational(gammaP[k]) == c.flats.gammaPlusClosedPoly(k).eval(m));
      }
    }
  }
}

TEST_CASE("combinatorial reciprocity between chains and faces") {
  for (const char* name : {"A2", "A3", "B2", "B3", "I2(6)"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 3; ++m) {
      ClusterComplex cc(c.full, c.flats, m);
      auto gamma = cc.gammaCensus();
      auto gammaP = cc.gammaPlusCensus();
      for (int k = 0; k < c.flats.numOrbits(); ++k) {
        int dim = c.flats.orbitDim(k);
        Rational sign = dim % 2 == 0 ? 1 : -1;
        // (-1)^k kappa(X, -m) = gamma+(X, m).
        CHECK(sign * c.nc.kappaPoly(k).eval(-m) == Rational(gammaP[k]));
      }
    }
  }
}

TEST_CASE("h-vectors match Narayana numbers") {
  for (const char* name : {"A2", "A3", "B3", "H3", "I2(9)"}) {
    CAPTURE(name);
    Ctx c(name);
    int n = c.sys.rank();
    for (int m = 1; m <= 3; ++m) {
      ClusterComplex cc(c.full, c.flats, m);
      auto h = ClusterComplex::hFromF(cc.fVector());
      auto hp = ClusterComplex::hFromF(cc.fPlusVector());
      auto nar = c.nc.narayanaCensus(m);
      auto narP = c.nc.narayanaPlusCensus(m);
      for (int k = 0; k <= n; ++k) {
        CHECK(h[n - k] == Rational(nar[k]));
        CHECK(hp[n - k] == Rational(narP[k]));
      }
    }
  }
}

TEST_CASE("structural checks: rotation orbits, invariance, fibers, purity") {
  for (const char* name : {"A2", "A3", "B3", "H3", "I2(5)", "I2(8)"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 2; ++m) {
      ClusterComplex cc(c.full, c.flats, m);
      CHECK(cc.rotationOrbitCheck());
      CHECK(cc.rotationInvarianceCheck());
      CHECK(cc.productFiberCheck());
      CHECK(cc.purityCheck());
    }
  }
}

TEST_CASE("recursion for the refined face census") {
  for (const char* name : {"A2", "A3", "B3", "I2(7)"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 2; ++m) CHECK(gammaRecursionCheck(c.full, c.flats, m));
  }
}

TEST_CASE("reducible censuses are products") {
  for (const char* name : {"A1xA1", "A2xA1", "B2xA1"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 2; ++m) CHECK(gammaReducibleCheck(c.full, c.flats, m));
  }
  // gamma(A1xA1, V, m) = (m+1)^2: facets of the product of two segments.
  Ctx c("A1xA1");
  ClusterComplex cc(c.full, c.flats, 3);
  CHECK(cc.facetCount() == 16);
}

TEST_CASE("face-chain bijection on A2: all 11 faces of the m=1 complex") {
  Ctx a2("A2");
  ClusterComplex cc(a2.full, a2.flats, 1);
  CHECK(cc.numFaces() == 11);  // 1 + 5 + 5
  FaceChainBijection bij(cc, a2.nc);
  CHECK(bij.roundtripCheck());
  // The empty face maps to the constant chain at c.
  int empty = cc.faceIndex({});
  REQUIRE(empty >= 0);
  auto chain = bij.faceToChain(empty);
  int top = a2.nc.indexOf(a2.sys.coxeter());
  CHECK(chain == std::vector<int>{top, top});
  // The all-negative face maps to the constant chain at e.
  std::vector<int> negVerts;
  for (int v = 0; v < cc.numVertices(); ++v)
    if (!a2.sys.isPositive(cc.vertex(v).root)) negVerts.push_back(v);
  std::sort(negVerts.rbegin(), negVerts.rend());
  int negFace = cc.faceIndex(negVerts);
  REQUIRE(negFace >= 0);
  int e = a2.nc.indexOf(a2.sys.identity());
  CHECK(bij.faceToChain(negFace) == std::vector<int>{e, e});
}

TEST_CASE("face-chain bijection roundtrips") {
  for (const char* name : {"A2", "B2", "I2(5)", "A3"}) {
    CAPTURE(name);
    Ctx c(name);
    for (int m = 1; m <= 2; ++m) {
      ClusterComplex cc(c.full, c.flats, m);
      FaceChainBijection bij(cc, c.nc);
      CHECK(bij.roundtripCheck());
    }
  }
}

TEST_CASE("gamma = N kappa") {
  for (const char* name : {"A2", "A3", "B3", "I2(7)"}) {
    CAPTURE(name);
    Ctx c(name);
    ThetaMatrices tm = ThetaMatrices::build(c.nc);
    for (int m = 1; m <= 3; ++m) {
      ClusterComplex cc(c.full, c.flats, m);
      auto gamma = cc.gammaCensus();
      auto gammaP = cc.gammaPlusCensus();
      auto kappa = c.nc.kappaCensus(m);
      auto kappaP = c.nc.kappaPlusCensus(m);
      CHECK(gamma == ThetaMatrices::apply(tm.N, kappa));
      CHECK(gammaP == ThetaMatrices::apply(tm.N, kappaP));
    }
  }
}
