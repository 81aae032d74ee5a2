#pragma once

#include "coxcat/numbers.hpp"

#include <vector>

namespace coxcat {

/// A real algebraic extension Q(theta), theta = 2cos(pi/m), given by the monic
/// integer minimal polynomial of theta and a rational interval isolating the
/// designated real root. One such field per group; fields are interned, so
/// pointer equality decides compatibility.
struct NumberField {
  int m = 0;                      // theta = 2cos(pi/m)
  std::vector<Rational> minpoly;  // monic, integer coefficients, degree >= 2
  Rational lo, hi;                // isolating interval, minpoly(lo) < 0 < minpoly(hi)
  std::string name;

  int degree() const { return int(minpoly.size()) - 1; }
};

/// Interned field for Q(2cos(pi/m)); returns nullptr when 2cos(pi/m) is
/// rational (m <= 3) so plain rationals are used.
const NumberField* fieldFor(int m);

/// Element of Q or of a NumberField, as a reduced polynomial in theta.
/// field() == nullptr means a plain rational. Immutable value semantics.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& r) : c_(r == 0 ? std::vector<Rational>{} : std::vector<Rational>{r}) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(const NumberField* f, std::vector<Rational> coeffs);

  static Scalar theta(const NumberField* f);

  const NumberField* field() const { return f_; }
  bool isZero() const { return c_.empty(); }
  bool isRational() const { return c_.size() <= 1; }
  Rational asRational() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  /// Sign of the real embedding at the designated root. Exact zero is decided
  /// from the reduced representation; otherwise the isolating interval is
  /// bisected until interval arithmetic separates the value from zero.
  int sign() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Structural total order (field, then coefficient-lex). Used for canonical
  /// containers, not the real embedding.
  bool structLess(const Scalar& o) const;

  std::string str() const;

 private:
  const NumberField* f_ = nullptr;
  std::vector<Rational> c_;  // trimmed; empty == 0; size() <= f_->degree() when f_

  void promoteTo(const NumberField* f);
  void reduce();
  void trim();
};

struct ScalarStructLess {
  bool operator()(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    size_t n = std::max(a.size(), b.size());
    static const Scalar z;
    for (size_t i = 0; i < n; ++i) {
      const Scalar& x = i < a.size() ? a[i] : z;
      const Scalar& y = i < b.size() ? b[i] : z;
      if (x.structLess(y)) return true;
      if (y.structLess(x)) return false;
    }
    return false;
  }
};

}  // namespace coxcat
