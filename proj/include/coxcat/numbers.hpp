#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxcat {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int signOf(const Rational& q) { return q.sign(); }

inline Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// Exact conversion helpers; these throw instead of truncating.
inline Int asInt(const Rational& q) {
  if (denominator(q) != 1) throw std::domain_error("asInt: not an integer: " + q.str());
  return numerator(q);
}

inline long asLong(const Rational& q) {
  Int z = asInt(q);
  if (z < std::numeric_limits<long>::min() || z > std::numeric_limits<long>::max())
    throw std::domain_error("asLong: out of range");
  return static_cast<long>(z);
}

}  // namespace coxcat
