#include "coxcat/field.hpp"
#include "coxcat/linalg.hpp"
#include "coxcat/unipoly.hpp"

#include "doctest.h"

#include <random>

using namespace coxcat;

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  Rational q(4, 6);
  CHECK(numerator(q) == 2);
  CHECK(denominator(q) == 3);
}

TEST_CASE("golden field: theta^2 = theta + 1") {
  const NumberField* f = fieldFor(5);
  REQUIRE(f != nullptr);
  CHECK(f->minpoly == std::vector<Rational>{-1, -1, 1});
  Scalar th = Scalar::theta(f);
  CHECK(th * th == th + Scalar(1));
  CHECK((th * th - th - Scalar(1)).isZero());
  CHECK((th * th - th - Scalar(1)).sign() == 0);
}

TEST_CASE("sign via interval refinement") {
  const NumberField* f = fieldFor(5);
  Scalar th = Scalar::theta(f);
  CHECK((th - Scalar(1)).sign() == 1);   // theta ~ 1.618
  CHECK((th - Scalar(2)).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  // Small mixed values around zero.
  CHECK((th * Scalar(Rational(1, 1000)) - Scalar(Rational(1, 617))).sign() == -1);
  CHECK((th * Scalar(Rational(1, 1000)) - Scalar(Rational(1, 619))).sign() == 1);
}

TEST_CASE("field inversion and division by zero") {
  const NumberField* f7 = fieldFor(7);
  REQUIRE(f7 != nullptr);
  CHECK(f7->degree() == 3);
  Scalar th = Scalar::theta(f7);
  Scalar x = th * th - Scalar(Rational(1, 3)) * th + Scalar(2);
  CHECK(x * x.inverse() == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("mismatched fields rejected") {
  Scalar a = Scalar::theta(fieldFor(5));
  Scalar b = Scalar::theta(fieldFor(7));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
  const NumberField* f = fieldFor(8);  // degree 2: x^2 - 2... actually 2cos(pi/8): degree 4
  std::mt19937 rng(12345);
  auto rnd = [&]() {
    std::vector<Rational> c;
    for (int i = 0; i < f->degree(); ++i)
      c.push_back(Rational(int(rng() % 19) - 9, 1 + int(rng() % 7)));
    return Scalar(f, c);
  };
  for (int iter = 0; iter < 40; ++iter) {
    Scalar a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.isZero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(a.sign() * b.sign() == (a * b).sign());
  }
}

TEST_CASE("real cyclotomic minimal polynomials") {
  CHECK(fieldFor(3) == nullptr);  // 2cos(pi/3) = 1
  CHECK(fieldFor(4)->minpoly == std::vector<Rational>{-2, 0, 1});
  CHECK(fieldFor(6)->minpoly == std::vector<Rational>{-3, 0, 1});
  CHECK(fieldFor(7)->minpoly == std::vector<Rational>{1, -2, -1, 1});
  CHECK(fieldFor(9)->minpoly == std::vector<Rational>{-1, -3, 0, 1});
  CHECK(fieldFor(12)->minpoly == std::vector<Rational>{1, 0, -4, 0, 1});
  // H3 and I2(5) share one interned field.
  CHECK(fieldFor(5) == fieldFor(5));
}

TEST_CASE("unipoly arithmetic and evaluation") {
  UniPoly p(Var::t, {Rational(2), Rational(-3), Rational(1)});  // (t-1)(t-2)
  CHECK(p.eval(4) == 6);
  CHECK(p.degree() == 2);
  auto roots = p.integerRoots();
  CHECK(roots == std::vector<Int>{1, 2});
  UniPoly rebuilt = UniPoly::constant(Var::t, 1);
  for (const Int& r : roots) rebuilt *= UniPoly(Var::t, {Rational(-r), Rational(1)});
  CHECK(rebuilt == p);

  UniPoly q(Var::t, {Rational(1), Rational(0), Rational(1)});  // t^2 + 1
  CHECK_THROWS_AS(q.integerRoots(), std::domain_error);

  UniPoly linear(Var::m, {Rational(0), Rational(3)});  // 3m
  CHECK(linear.negateVariable() == UniPoly(Var::m, {Rational(0), Rational(-3)}));

  CHECK_THROWS_AS(p + linear.retag(Var::q).compose(UniPoly::variable(Var::q)), std::invalid_argument);
}

TEST_CASE("unipoly zero polynomial degree sentinel") {
  UniPoly z(Var::z);
  CHECK(z.isZero());
  CHECK(z.degree() == UniPoly::kNegInf);
}

TEST_CASE("unipoly composition") {
  // gamma substitution shape: p(q/(1-q)) * (1-q)^k style checks use compose.
  UniPoly p(Var::m, {Rational(1), Rational(2)});              // 1 + 2m
  UniPoly arg(Var::q, {Rational(0), Rational(-1)});            // -q
  CHECK(p.compose(arg) == UniPoly(Var::q, {Rational(1), Rational(-2)}));
}

TEST_CASE("exact rank and span membership") {
  auto S = [](long v) { return Scalar(Rational(v)); };
  Mat m = {{S(1), S(2), S(3)}, {S(2), S(4), S(6)}, {S(0), S(1), S(1)}};
  CHECK(matRank(m) == 2);
  Echelon e(3);
  e.addRow({S(1), S(2), S(3)});
  e.addRow({S(0), S(1), S(1)});
  CHECK(e.inSpan({S(2), S(5), S(7)}));
  CHECK(!e.inSpan({S(0), S(0), S(1)}));
  auto coords = coordinatesIn({{S(1), S(0), S(1)}, {S(0), S(1), S(1)}}, {S(3), S(4), S(7)});
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == S(3));
  CHECK((*coords)[1] == S(4));
}
