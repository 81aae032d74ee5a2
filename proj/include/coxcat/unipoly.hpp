#pragma once

#include "coxcat/numbers.hpp"

#include <limits>
#include <vector>

namespace coxcat {

enum class Var : uint8_t { t, m, q, z };

const char* varName(Var v);

/// Dense univariate polynomial over Q with a variable tag. Adding or
/// multiplying polynomials in different variables is an error.
class UniPoly {
 public:
  static constexpr int kNegInf = std::numeric_limits<int>::min();

  explicit UniPoly(Var v = Var::t) : var_(v) {}
  UniPoly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(Var v, const Rational& r);
  static UniPoly variable(Var v);  // the monomial x

  Var var() const { return var_; }
  int degree() const { return c_.empty() ? kNegInf : int(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : Rational(0); }
  Rational leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  UniPoly& scale(const Rational& r);

  bool operator==(const UniPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;
  /// Composition p(arg); the result carries arg's variable.
  UniPoly compose(const UniPoly& arg) const;
  /// Same polynomial under a new variable name.
  UniPoly retag(Var v) const { return UniPoly(v, c_); }
  /// p(-x).
  UniPoly negateVariable() const;

  /// Quotient and remainder over Q.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
  bool divisibleBy(const UniPoly& d) const;

  /// All integer roots with multiplicity. Requires a monic polynomial with
  /// integer coefficients; throws if the polynomial does not factor into
  /// integer-root linear factors.
  std::vector<Int> integerRoots() const;

  std::string str() const;

 private:
  Var var_;
  std::vector<Rational> c_;  // low degree first, trailing zeros trimmed

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void checkVar(const UniPoly& o) const;
};

}  // namespace coxcat
