#include "coxcat/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace coxcat {
namespace {

// Integer polynomials as dense Rational vectors, low degree first.
using Poly = std::vector<Rational>;

void polyTrim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly polyMul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division, remainder must vanish.
Poly polyDivExact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    polyTrim(a);
  }
  if (!a.empty()) throw std::logic_error("polyDivExact: nonzero remainder");
  return q;
}

Rational polyEval(const Poly& p, const Rational& x) {
  Rational r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Cyclotomic polynomial Phi_n via (x^n - 1) / prod_{d|n, d<n} Phi_d.
Poly cyclotomic(int n) {
  static std::map<int, Poly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = polyDivExact(num, cyclotomic(d));
  memo[n] = num;
  return num;
}

// Minimal polynomial of 2cos(2pi/n) for n >= 3: substitute x = y + 1/y into
// the (palindromic) Phi_n using y^k + y^-k = v_k(x), v_0 = 2, v_1 = x,
// v_{k+1} = x v_k - v_{k-1}.
Poly realCyclotomic(int n) {
  Poly phi = cyclotomic(n);
  int d = (int(phi.size()) - 1) / 2;
  std::vector<Poly> v(d + 1);
  v[0] = {Rational(2)};
  if (d >= 1) v[1] = {Rational(0), Rational(1)};
  for (int k = 2; k <= d; ++k) {
    Poly xv = polyMul({Rational(0), Rational(1)}, v[k - 1]);
    Poly r = xv;
    for (size_t i = 0; i < v[k - 2].size(); ++i) r[i] -= v[k - 2][i];
    polyTrim(r);
    v[k] = r;
  }
  Poly psi = {phi[d]};
  for (int k = 1; k <= d; ++k) {
    Poly term = v[k];
    for (auto& c : term) c *= phi[d - k];
    if (term.size() > psi.size()) psi.resize(term.size(), Rational(0));
    for (size_t i = 0; i < term.size(); ++i) psi[i] += term[i];
  }
  polyTrim(psi);
  return psi;
}

std::map<Poly, std::unique_ptr<NumberField>>& fieldRegistry() {
  static std::map<Poly, std::unique_ptr<NumberField>> reg;
  return reg;
}

std::mutex fieldMutex;

}  // namespace

const NumberField* fieldFor(int m) {
  if (m <= 3) return nullptr;  // 2cos(pi/2) = 0, 2cos(pi/3) = 1
  Poly psi = realCyclotomic(2 * m);
  if (psi.size() <= 2) return nullptr;  // degree <= 1: rational value
  std::lock_guard<std::mutex> lock(fieldMutex);
  auto& reg = fieldRegistry();
  auto it = reg.find(psi);
  if (it != reg.end()) return it->second.get();

  auto f = std::make_unique<NumberField>();
  f->m = m;
  f->minpoly = psi;
  // 2cos(pi/m) is the largest root; the next root down is 2cos(k pi/m) with
  // k >= 3, leaving a gap far wider than 1/1024.
  double approx = 2.0 * std::cos(M_PI / m);
  f->lo = Rational(long(std::floor((approx - 0.05) * 1024)), 1024);
  f->hi = Rational(2);
  if (!(polyEval(psi, f->lo) < 0 && polyEval(psi, f->hi) > 0))
    throw std::logic_error("fieldFor: isolating interval sanity check failed");
  std::ostringstream nm;
  nm << "Q(2cos(pi/" << m << "))";
  f->name = nm.str();
  const NumberField* ptr = f.get();
  reg.emplace(std::move(psi), std::move(f));
  return ptr;
}

Scalar::Scalar(const NumberField* f, std::vector<Rational> coeffs) : f_(f), c_(std::move(coeffs)) {
  reduce();
  trim();
}

Scalar Scalar::theta(const NumberField* f) {
  return Scalar(f, {Rational(0), Rational(1)});
}

Rational Scalar::asRational() const {
  if (c_.empty()) return Rational(0);
  if (c_.size() == 1) return c_[0];
  throw std::domain_error("Scalar::asRational: value has nonzero theta part");
}

void Scalar::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.size() <= 1) f_ = nullptr;
}

void Scalar::reduce() {
  if (!f_) {
    if (c_.size() > 1) throw std::logic_error("Scalar: rational with theta coefficients");
    return;
  }
  size_t d = size_t(f_->degree());
  while (c_.size() > d) {
    Rational top = c_.back();
    size_t k = c_.size() - 1 - d;
    c_.pop_back();
    if (top == 0) continue;
    for (size_t i = 0; i < d; ++i) c_[k + i] -= top * f_->minpoly[i];
  }
}

void Scalar::promoteTo(const NumberField* f) {
  if (f_ == f) return;
  if (f_ == nullptr) {
    f_ = f;
    return;
  }
  if (f == nullptr && c_.size() <= 1) return;
  throw std::invalid_argument("Scalar: mismatched fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.f_ && f_ && o.f_ != f_) throw std::invalid_argument("Scalar: mismatched fields");
  if (o.f_) promoteTo(o.f_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.f_ && f_ && o.f_ != f_) throw std::invalid_argument("Scalar: mismatched fields");
  const NumberField* f = f_ ? f_ : o.f_;
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    f_ = nullptr;
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  f_ = f;
  c_ = std::move(r);
  reduce();
  trim();
  return *this;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw std::domain_error("Scalar: division by zero");
  if (isRational()) return Scalar(Rational(1) / c_[0]);
  // Extended Euclid in Q[x]: u*c + v*minpoly = gcd = const (minpoly irreducible).
  Poly r0 = f_->minpoly, r1(c_.begin(), c_.end());
  Poly s0 = {}, s1 = {Rational(1)};  // s tracks the coefficient of c
  while (true) {
    polyTrim(r1);
    if (r1.empty()) throw std::logic_error("Scalar::inverse: gcd hit zero");
    if (r1.size() == 1) {
      Poly res = s1;
      for (auto& x : res) x /= r1[0];
      return Scalar(f_, std::move(res));
    }
    // r0 = q*r1 + rem
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    Poly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      polyTrim(rem);
    }
    Poly s2 = s0;
    Poly qs1 = polyMul(q, s1);
    if (qs1.size() > s2.size()) s2.resize(qs1.size(), Rational(0));
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    polyTrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

struct Interval {
  Rational lo, hi;
};

Interval ivAdd(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }

Interval ivMul(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

}  // namespace

int Scalar::sign() const {
  if (c_.empty()) return 0;
  if (c_.size() == 1) return signOf(c_[0]);
  Rational lo = f_->lo, hi = f_->hi;
  int sLo = signOf(polyEval(f_->minpoly, lo));
  for (int iter = 0; iter < 20000; ++iter) {
    Interval th{lo, hi};
    Interval acc{c_.back(), c_.back()};
    for (size_t i = c_.size() - 1; i-- > 0;) acc = ivAdd(ivMul(acc, th), c_[i]);
    if (acc.lo > 0) return 1;
    if (acc.hi < 0) return -1;
    Rational mid = (lo + hi) / 2;
    int sMid = signOf(polyEval(f_->minpoly, mid));
    if (sMid == 0) throw std::logic_error("Scalar::sign: rational root of minimal polynomial");
    if (sMid == sLo)
      lo = mid;
    else
      hi = mid;
  }
  throw std::logic_error("Scalar::sign: interval refinement did not converge");
}

bool Scalar::operator==(const Scalar& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool Scalar::structLess(const Scalar& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = 0; i < n; ++i) {
    Rational a = i < c_.size() ? c_[i] : Rational(0);
    Rational b = i < o.c_.size() ? o.c_[i] : Rational(0);
    if (a != b) return a < b;
  }
  return false;
}

std::string Scalar::str() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].str();
  std::ostringstream out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (out.tellp() > 0 && c_[i] > 0) out << "+";
    out << c_[i].str();
    if (i >= 1) out << "*th";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

}  // namespace coxcat
