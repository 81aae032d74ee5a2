#include "coxcat/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace coxcat {
namespace factor {

std::vector<Factorization> enumerateFactorizations(const NCLattice& nc,
                                                   const std::vector<char>& admissible) {
  const SubSystem& G = nc.sub();
  const CoxeterSystem& W = *G.W;
  ElemId c = nc.coxeterElem();
  std::vector<Factorization> out;

  for (int i = 0; i < nc.size(); ++i) {
    if (!admissible[i]) continue;
    ElemId w = nc.elem(i);
    int k = G.rank() - nc.length(i);
    // Enumerate minimal reflection words of u = w^-1 c by peeling
    // left factors: t_1 with l(t_1 u) = l(u) - 1, then recurse.
    std::vector<int> word;
    std::function<void(ElemId)> words = [&](ElemId u) {
      if (int(word.size()) == k) {
        if (u != W.identity()) throw std::logic_error("factorization word inconsistency");
        Factorization f;
        f.w = w;
        f.tail = word;
        // nil: Coxeter-length descents along prefixes w, wt_1, wt_1t_2, ...
        f.nil = 0;
        ElemId p = w;
        for (int r : f.tail) {
          ElemId q = W.mul(p, W.reflection(r));
          int lp = W.coxeterLength(p), lq = W.coxeterLength(q);
          if (lp == lq) throw std::logic_error("prefixes with equal Coxeter length");
          if (lp > lq) ++f.nil;
          p = q;
        }
        out.push_back(f);
        return;
      }
      int lu = W.reflectionLength(u);
      for (int r : G.posRoots) {
        ElemId next = W.mul(W.reflection(r), u);
        if (W.reflectionLength(next) != lu - 1) continue;
        word.push_back(r);
        words(next);
        word.pop_back();
      }
    };
    words(W.mul(W.inverse(w), c));
  }
  return out;
}

UniPoly phiEnumerated(const NCLattice& nc, const std::vector<char>& admissible) {
  UniPoly phi(Var::q);
  for (const Factorization& f : enumerateFactorizations(nc, admissible)) {
    std::vector<Rational> mono(f.nil + 1, Rational(0));
    mono[f.nil] = 1;
    phi += UniPoly(Var::q, mono);
  }
  return phi;
}

UniPoly phiForOrbit(const NCLattice& nc, int orbit) {
  std::vector<char> adm(nc.size(), 0);
  for (int i = 0; i < nc.size(); ++i) adm[i] = nc.theta(i) == orbit;
  return phiEnumerated(nc, adm);
}

UniPoly phiClosedForm(const SubSystem& full, const FlatTable& flats, int orbit) {
  int h = full.coxeterNumber();
  int k = flats.orbitDim(orbit);
  UniPoly p = UniPoly::constant(Var::q, Rational(factorial(k)) /
                                            Rational(flats.normalizerIndex(orbit)));
  for (const Int& b : flats.osExponents(orbit))
    p *= UniPoly(Var::q, {Rational(b + 1), Rational(Int(h) - b - 1)});
  return p;
}

UniPoly phiFromGammaPoly(const UniPoly& gammaPoly, int k) {
  if (gammaPoly.degree() > k) throw std::invalid_argument("gamma polynomial degree exceeds k");
  UniPoly q = UniPoly::variable(Var::q);
  UniPoly oneMinusQ(Var::q, {Rational(1), Rational(-1)});
  UniPoly out(Var::q);
  for (int j = 0; j <= k; ++j) {
    Rational cj = gammaPoly.coeff(j);
    if (cj == 0) continue;
    UniPoly term = UniPoly::constant(Var::q, cj);
    for (int i = 0; i < j; ++i) term *= q;
    for (int i = 0; i < k - j; ++i) term *= oneMinusQ;
    out += term;
  }
  out.scale(Rational(factorial(k)));
  return out;
}

bool phiRecursionCheck(const SubSystem& full, const FlatTable& flats) {
  if (!full.irreducible()) throw std::invalid_argument("recursion check needs irreducible W");
  const CoxeterSystem& W = *full.W;
  int h = full.coxeterNumber();
  NCLattice nc(full, flats);

  // Parabolic polynomials, accumulated by ambient class.
  std::vector<UniPoly> rhs(flats.numOrbits(), UniPoly(Var::q));
  for (int drop : full.simples) {
    std::vector<int> keep;
    for (int s : full.simples)
      if (s != drop) keep.push_back(s);
    SubSystem sub = SubSystem::standard(W, keep);
    FlatTable subFlats(sub);
    NCLattice subNC(sub, subFlats);
    for (int k = 0; k < flats.numOrbits(); ++k) {
      std::vector<char> adm(subNC.size(), 0);
      bool any = false;
      for (int i = 0; i < subNC.size(); ++i) {
        adm[i] = flats.orbitOf(subNC.elem(i)) == k;
        any = any || adm[i];
      }
      if (any) rhs[k] += phiEnumerated(subNC, adm);
    }
  }
  UniPoly factorPoly(Var::q, {Rational(1), Rational(h - 2, 2)});  // (2 + q(h-2))/2
  for (int k = 0; k < flats.numOrbits(); ++k) {
    UniPoly lhs = phiForOrbit(nc, k);
    if (flats.orbitDim(k) == 0) {
      // Initial case of the induction: the Coxeter class has the single
      // trivial factorization and the right-hand side is empty.
      if (lhs != UniPoly::constant(Var::q, 1)) return false;
      continue;
    }
    if (lhs != factorPoly * rhs[k]) return false;
  }
  return true;
}

bool phiProductRuleCheck(const SubSystem& full, const FlatTable& flats) {
  if (full.components.size() != 2)
    throw std::invalid_argument("product rule check expects two factors");
  const CoxeterSystem& W = *full.W;
  NCLattice nc(full, flats);

  SubSystem g1 = SubSystem::standard(W, full.components[0]);
  SubSystem g2 = SubSystem::standard(W, full.components[1]);
  FlatTable f1(g1), f2(g2);
  NCLattice nc1(g1, f1), nc2(g2, f2);

  std::map<int, UniPoly> expected;
  for (int x1 = 0; x1 < f1.numOrbits(); ++x1)
    for (int x2 = 0; x2 < f2.numOrbits(); ++x2) {
      // Class of the product via representatives (factors commute).
      ElemId rep = W.identity();
      bool found1 = false, found2 = false;
      for (int i = 0; i < nc1.size() && !found1; ++i)
        if (nc1.theta(i) == x1) {
          rep = W.mul(rep, nc1.elem(i));
          found1 = true;
        }
      for (int i = 0; i < nc2.size() && !found2; ++i)
        if (nc2.theta(i) == x2) {
          rep = W.mul(rep, nc2.elem(i));
          found2 = true;
        }
      if (!found1 || !found2) return false;
      int orbit = flats.orbitOf(rep);
      int k1 = f1.orbitDim(x1), k2 = f2.orbitDim(x2);
      UniPoly prod = phiForOrbit(nc1, x1) * phiForOrbit(nc2, x2);
      prod.scale(Rational(binomial(k1 + k2, k1)));
      if (expected.count(orbit)) return false;  // product classes must be distinct
      expected.emplace(orbit, prod);
    }
  for (int k = 0; k < flats.numOrbits(); ++k) {
    auto it = expected.find(k);
    if (it == expected.end()) return false;
    if (phiForOrbit(nc, k) != it->second) return false;
  }
  return true;
}

bool phiIndependenceOfCoxeterElement(const SubSystem& full, const FlatTable& flats) {
  const CoxeterSystem& W = *full.W;
  // Second standard Coxeter element: the product in descending simple order.
  ElemId c2 = W.identity();
  for (auto it = full.simples.rbegin(); it != full.simples.rend(); ++it)
    c2 = W.mul(c2, W.simple(*it));
  NCLattice nc1(full, flats);
  NCLattice nc2(full, flats, c2);
  for (int k = 0; k < flats.numOrbits(); ++k)
    if (phiForOrbit(nc1, k) != phiForOrbit(nc2, k)) return false;
  return true;
}

bool rightInversionBijectionCheck(const SubSystem& full, ElemId c) {
  const CoxeterSystem& W = *full.W;
  std::set<int> image;
  int count = 0;
  for (int r : full.posRoots) {
    ElemId ct = W.mul(c, W.reflection(r));
    if (W.coxeterLength(ct) >= W.coxeterLength(c)) continue;
    ++count;
    uint32_t missing = full.mask & ~W.supportMask(ct);
    if (__builtin_popcount(missing) != 1) return false;
    image.insert(__builtin_ctz(missing));
  }
  return count == full.rank() && int(image.size()) == full.rank();
}

bool coxeterConjugationOrbitCheck(const SubSystem& full, ElemId c) {
  if (!full.irreducible()) throw std::invalid_argument("orbit check needs irreducible W");
  const CoxeterSystem& W = *full.W;
  int h = full.coxeterNumber();
  std::set<int> seen;
  for (int r : full.posRoots) {
    if (seen.count(r)) continue;
    std::vector<int> orbit;
    int cur = r;
    do {
      seen.insert(cur);
      orbit.push_back(cur);
      cur = W.conjugateReflection(c, cur);
    } while (cur != r);
    int inversions = 0;
    for (int t : orbit)
      if (W.coxeterLength(W.mul(c, W.reflection(t))) < W.coxeterLength(c)) ++inversions;
    if (int(orbit.size()) * 2 == h && inversions == 1) continue;
    if (int(orbit.size()) == h && inversions == 2) continue;
    return false;
  }
  return true;
}

}  // namespace factor
}  // namespace coxcat
