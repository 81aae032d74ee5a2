#include "coxcat/characters.hpp"

#include "doctest.h"

using namespace coxcat;

namespace {

struct Ctx {
  CoxeterSystem sys;
  SubSystem full;
  FlatTable flats;
  NCLattice nc;
  CharacterData chars;
  explicit Ctx(const char* name)
      : sys(CoxeterSystem::fromString(name)),
        full((sys.enumerate(), SubSystem::full(sys))),
        flats(full),
        nc(full, flats),
        chars(full, flats) {}
};

std::vector<Rational> toRat(const std::vector<Int>& v) {
  std::vector<Rational> out;
  for (const Int& x : v) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST_CASE("marks table of A2") {
  Ctx a2("A2");
  // Orbits dim-ascending: Coxeter class, A1 class, full space V.
  // Phi at X = origin flat (W_X = W): trivial character, constant 1.
  CHECK(a2.chars.phiValues(0) == std::vector<Rational>{1, 1, 1});
  // Phi at X = V (W_X = {e}): regular character, |W| at e and 0 elsewhere.
  CHECK(a2.chars.phiValues(2) == std::vector<Rational>{0, 0, 6});
  // Middle: Phi_{A1} = ind from an A1 parabolic: values (0, 1, 3).
  CHECK(a2.chars.phiValues(1) == std::vector<Rational>{0, 1, 3});
  CHECK(a2.chars.marksTriangularCheck());
}

TEST_CASE("psi expansion equals characteristic polynomials") {
  for (const char* name : {"A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(7)"}) {
    CAPTURE(name);
    Ctx c(name);
    CHECK(c.chars.marksTriangularCheck());
    CHECK(c.chars.psiExpansionCheck());
  }
}

TEST_CASE("psi specializations on A2") {
  Ctx a2("A2");
  // Psi_4 values (dim-ascending classes): 4^0, 4^1, 4^2.
  CHECK(a2.chars.psiValues(4) == std::vector<Rational>{1, 4, 16});
  // Psi_{-1} = (-1)^n eps.
  auto psi = a2.chars.psiValues(-1);
  auto eps = a2.chars.signValues();
  for (size_t i = 0; i < psi.size(); ++i) CHECK(psi[i] == eps[i]);
  // Expansion coefficients of Psi_4 are the kappa values at m = 1.
  auto coeffs = a2.chars.expandOverMarks(a2.chars.psiSymbolic());
  CHECK(coeffs[0].eval(4) == 1);
  CHECK(coeffs[1].eval(4) == 3);
  CHECK(coeffs[2].eval(4) == 1);
}

TEST_CASE("Solomon identity for every standard subset") {
  for (const char* name : {"A2", "A3", "B2", "B3", "I2(6)", "I2(7)"}) {
    CAPTURE(name);
    Ctx c(name);
    CHECK(c.chars.solomonCheck());
  }
}

TEST_CASE("sign commutes with induction") {
  Ctx a2("A2");
  SubSystem sub = SubSystem::standard(a2.sys, {0});
  FlatTable subFlats(sub);
  CharacterData subChars(sub, subFlats);
  CHECK(a2.chars.signInductionCheck(subChars));
  // eps (x) eps = trivial.
  auto eps = a2.chars.signValues();
  CHECK(CharacterData::tensor(eps, eps) == std::vector<Rational>{1, 1, 1});
}

TEST_CASE("induction basics and transitivity") {
  Ctx a2("A2");
  // ind of the trivial character of W_I is Phi_I.
  SubSystem sub = SubSystem::standard(a2.sys, {0});
  FlatTable subFlats(sub);
  CharacterData subChars(sub, subFlats);
  std::vector<Rational> triv(subChars.numClasses(), Rational(1));
  auto ind = a2.chars.induceValues(subChars, triv);
  CHECK(ind == a2.chars.phiValues(1));
  // From the empty subsystem: the regular character.
  SubSystem empty = SubSystem::standard(a2.sys, {});
  FlatTable emptyFlats(empty);
  CharacterData emptyChars(empty, emptyFlats);
  auto reg = a2.chars.induceValues(emptyChars, {Rational(1)});
  CHECK(reg == std::vector<Rational>{0, 0, 6});
  // Transitivity: inducing the trivial character of W_empty through W_{s0}
  // equals inducing it directly.
  auto viaMiddle =
      a2.chars.induceValues(subChars, subChars.induceValues(emptyChars, {Rational(1)}));
  CHECK(viaMiddle == reg);
}

TEST_CASE("parking characters: three constructions agree") {
  for (const char* name : {"A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(8)"}) {
    CAPTURE(name);
    Ctx c(name);
    int h = c.full.coxeterNumber();
    ThetaMatrices tm = ThetaMatrices::build(c.nc);
    for (int m = 1; m <= 3; ++m) {
      auto kappa = c.nc.kappaCensus(m);
      auto kappaP = c.nc.kappaPlusCensus(m);
      // Matrix route.
      CHECK(tm.parkVector(m) == kappa);
      CHECK(tm.parkPrimeVector(m) == kappaP);
      // Character route: values of the kappa-weighted Phi sum equal Psi_{mh+1}.
      CHECK(c.chars.valuesOf(toRat(kappa)) == c.chars.psiValues(m * h + 1));
      CHECK(c.chars.valuesOf(toRat(kappaP)) == c.chars.psiValues(m * h - 1));
      // Trivial multiplicities are the Fuss-Catalan numbers.
      CHECK(c.chars.trivialMultiplicity(c.chars.psiValues(m * h + 1)) ==
            c.sys.type().catalan(m));
      CHECK(c.chars.trivialMultiplicity(c.chars.psiValues(m * h - 1)) ==
            c.sys.type().catalanPlus(m));
    }
  }
}

TEST_CASE("park values on A2 match the spec vectors") {
  Ctx a2("A2");
  auto kappa = a2.nc.kappaCensus(1);
  auto values = a2.chars.valuesOf(toRat(kappa));
  // Classes in dim-ascending order (cox, refl, e): (4^0, 4^1, 4^2).
  CHECK(values == std::vector<Rational>{1, 4, 16});
  auto kappaP = a2.nc.kappaPlusCensus(1);
  CHECK(a2.chars.valuesOf(toRat(kappaP)) == std::vector<Rational>{1, 2, 4});
}

TEST_CASE("prime parking from negated parameter") {
  // park'_{W,m} = Psi_{-1} (x) park_{W,-m} at the level of values, with the
  // kappa polynomials evaluated at -m.
  for (const char* name : {"A2", "B2", "B3", "H3", "I2(7)"}) {
    CAPTURE(name);
    Ctx c(name);
    int K = c.flats.numOrbits();
    for (int m = 1; m <= 3; ++m) {
      std::vector<Rational> kappaNeg(K);
      for (int k = 0; k < K; ++k) kappaNeg[k] = c.nc.kappaPoly(k).eval(-m);
      auto rhs = CharacterData::tensor(c.chars.psiValues(-1), c.chars.valuesOf(kappaNeg));
      auto lhs = c.chars.valuesOf(toRat(c.nc.kappaPlusCensus(m)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("inclusion-exclusion for parking characters") {
  for (const char* name : {"A2", "B2", "A3", "I2(5)"}) {
    CAPTURE(name);
    Ctx c(name);
    const CoxeterSystem& W = c.sys;
    int r = c.full.rank();
    for (int m = 1; m <= 2; ++m) {
      auto park = c.chars.valuesOf(toRat(c.nc.kappaCensus(m)));
      auto parkP = c.chars.valuesOf(toRat(c.nc.kappaPlusCensus(m)));
      std::vector<Rational> sum1(c.chars.numClasses(), Rational(0));
      std::vector<Rational> sum2(c.chars.numClasses(), Rational(0));
      for (uint32_t I = 0; I < (1u << r); ++I) {
        std::vector<int> simples;
        for (int i = 0; i < r; ++i)
          if (I & (1u << i)) simples.push_back(c.full.simples[i]);
        SubSystem sub = SubSystem::standard(W, simples);
        FlatTable subFlats(sub);
        NCLattice subNC(sub, subFlats);
        CharacterData subChars(sub, subFlats);
        auto subPark = subChars.valuesOf(toRat(subNC.kappaCensus(m)));
        auto subParkP = subChars.valuesOf(toRat(subNC.kappaPlusCensus(m)));
        auto ind1 = c.chars.induceValues(subChars, subParkP);
        auto ind2 = c.chars.induceValues(subChars, subPark);
        Rational s = (r - __builtin_popcount(I)) % 2 == 0 ? 1 : -1;
        for (int y = 0; y < c.chars.numClasses(); ++y) {
          sum1[y] += ind1[y];
          sum2[y] += s * ind2[y];
        }
      }
      CHECK(park == sum1);
      CHECK(parkP == sum2);
    }
  }
}
