#include "coxcat/unipoly.hpp"

#include <sstream>

namespace coxcat {

const char* varName(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::m: return "m";
    case Var::q: return "q";
    case Var::z: return "z";
  }
  return "?";
}

UniPoly UniPoly::constant(Var v, const Rational& r) {
  return UniPoly(v, r == 0 ? std::vector<Rational>{} : std::vector<Rational>{r});
}

UniPoly UniPoly::variable(Var v) { return UniPoly(v, {Rational(0), Rational(1)}); }

Rational UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("UniPoly::leading of zero polynomial");
  return c_.back();
}

void UniPoly::checkVar(const UniPoly& o) const {
  if (var_ != o.var_)
    throw std::invalid_argument(std::string("UniPoly: variable mismatch ") + varName(var_) +
                                " vs " + varName(o.var_));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  checkVar(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  checkVar(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::scale(const Rational& r) {
  if (r == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= r;
  return *this;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UniPoly UniPoly::compose(const UniPoly& arg) const {
  UniPoly r(arg.var());
  for (size_t i = c_.size(); i-- > 0;) {
    r *= arg;
    r += UniPoly::constant(arg.var(), c_[i]);
  }
  return r;
}

UniPoly UniPoly::negateVariable() const {
  UniPoly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
  checkVar(d);
  if (d.isZero()) throw std::domain_error("UniPoly: division by zero polynomial");
  UniPoly r = *this;
  UniPoly q(var_);
  if (r.degree() >= d.degree())
    q.c_.assign(size_t(r.degree() - d.degree() + 1), Rational(0));
  while (!r.c_.empty() && r.c_.size() >= d.c_.size()) {
    Rational f = r.c_.back() / d.c_.back();
    size_t shift = r.c_.size() - d.c_.size();
    q.c_[shift] = f;
    for (size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= f * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

bool UniPoly::divisibleBy(const UniPoly& d) const { return divrem(d).second.isZero(); }

std::vector<Int> UniPoly::integerRoots() const {
  if (isZero()) throw std::domain_error("integerRoots: zero polynomial");
  if (leading() != 1) throw std::domain_error("integerRoots: polynomial not monic");
  for (const auto& c : c_)
    if (denominator(c) != 1) throw std::domain_error("integerRoots: non-integer coefficient");

  UniPoly p = *this;
  std::vector<Int> roots;
  while (p.degree() > 0) {
    // Rational root theorem: integer roots divide the constant term. A zero
    // constant term means root 0.
    Int a0 = asInt(p.c_[0]);
    bool found = false;
    if (a0 == 0) {
      roots.push_back(0);
      p.c_.erase(p.c_.begin());
      found = true;
    } else {
      Int bound = abs(a0);
      for (Int d = 1; d * d <= bound && !found; ++d) {
        if (bound % d != 0) continue;
        Int e = bound / d;
        for (const Int& cand : std::vector<Int>{d, -d, e, -e}) {
          if (p.eval(Rational(cand)) == 0) {
            roots.push_back(cand);
            auto [q, rem] = p.divrem(UniPoly(p.var(), {Rational(-cand), Rational(1)}));
            if (!rem.isZero()) throw std::logic_error("integerRoots: division inconsistency");
            p = q;
            found = true;
            break;
          }
        }
      }
    }
    if (!found)
      throw std::domain_error("integerRoots: polynomial does not split over the integers: " +
                              str());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first && c_[i] > 0) out << "+";
    first = false;
    if (i == 0 || c_[i] != 1) {
      if (i > 0 && c_[i] == -1)
        out << "-";
      else
        out << c_[i].str();
      if (i > 0 && abs(c_[i]) != 1) out << "*";
    }
    if (i > 0) out << varName(var_);
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace coxcat
