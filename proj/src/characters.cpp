#include "coxcat/characters.hpp"

#include <algorithm>

namespace coxcat {

CharacterData::CharacterData(const SubSystem& G, const FlatTable& flats)
    : G_(&G), flats_(&flats) {
  const CoxeterSystem& W = *G.W;
  int K = flats.numOrbits();

  classRep_.assign(K, W.identity());
  std::vector<char> found(K, 0);
  for (ElemId w : G.elems) {
    int k = flats.orbitOf(w);
    if (!found[k]) {
      classRep_[k] = w;
      found[k] = 1;
    }
  }

  // Coset transversals of the parabolic W_X at the orbit representative.
  transversal_.resize(K);
  for (int k = 0; k < K; ++k) {
    int flat = flats.orbitRep(k);
    std::vector<int> members = flats.parabolicMembers(flat);
    std::vector<char> covered(G.size(), 0);
    for (size_t i = 0; i < G.size(); ++i) {
      if (covered[i]) continue;
      ElemId y = G.elems[i];
      transversal_[k].push_back(y);
      for (int v : members) covered[G.local(W.mul(y, G.elems[v]))] = 1;
    }
  }

  marks_.assign(K, std::vector<Int>(K, Int(0)));
  for (int x = 0; x < K; ++x) {
    int flat = flats.orbitRep(x);
    for (int y = 0; y < K; ++y) {
      marks_[x][y] = phiValueAt(x, classRep_[y]);
      // The value is a class function of the flat orbit; cross-check on a
      // second representative when one exists.
      for (ElemId w : G.elems)
        if (flats.orbitOf(w) == y && w != classRep_[y]) {
          if (phiValueAt(x, w) != marks_[x][y])
            throw std::logic_error("mark depends on the class representative");
          break;
        }
    }
    (void)flat;
  }
}

Int CharacterData::phiValueAt(int orbitX, ElemId w) const {
  const CoxeterSystem& W = *G_->W;
  int flat = flats_->orbitRep(orbitX);
  Int count = 0;
  for (ElemId y : transversal_[orbitX]) {
    ElemId conj = W.mul(W.mul(W.inverse(y), w), y);
    if (flats_->memberOfParabolic(conj, flat)) ++count;
  }
  return count;
}

std::vector<Rational> CharacterData::valuesOf(const std::vector<Rational>& coeffs) const {
  int K = numClasses();
  std::vector<Rational> out(K, Rational(0));
  for (int y = 0; y < K; ++y)
    for (int x = 0; x < K; ++x)
      if (coeffs[x] != 0) out[y] += coeffs[x] * Rational(marks_[x][y]);
  return out;
}

std::vector<Rational> CharacterData::phiValues(int orbit) const {
  std::vector<Rational> out(numClasses());
  for (int y = 0; y < numClasses(); ++y) out[y] = Rational(marks_[orbit][y]);
  return out;
}

std::vector<Rational> CharacterData::signValues() const {
  std::vector<Rational> out(numClasses());
  for (int y = 0; y < numClasses(); ++y)
    out[y] = (G_->rank() - flats_->orbitDim(y)) % 2 == 0 ? 1 : -1;
  return out;
}

std::vector<Rational> CharacterData::psiValues(const Rational& t) const {
  std::vector<Rational> out(numClasses(), Rational(1));
  for (int y = 0; y < numClasses(); ++y)
    for (int i = 0; i < flats_->orbitDim(y); ++i) out[y] *= t;
  return out;
}

std::vector<UniPoly> CharacterData::psiSymbolic() const {
  std::vector<UniPoly> out;
  for (int y = 0; y < numClasses(); ++y) {
    std::vector<Rational> mono(flats_->orbitDim(y) + 1, Rational(0));
    mono.back() = 1;
    out.push_back(UniPoly(Var::t, mono));
  }
  return out;
}

std::vector<UniPoly> CharacterData::expandOverMarks(const std::vector<UniPoly>& values) const {
  int K = numClasses();
  std::vector<UniPoly> coeffs(K, UniPoly(Var::t));
  // Orbits are dim-ascending, and marks[X][Y] vanishes unless dim X <= dim Y
  // with equality only on the diagonal, so forward substitution works.
  for (int y = 0; y < K; ++y) {
    UniPoly rhs = values[y];
    for (int x = 0; x < y; ++x) {
      UniPoly t = coeffs[x];
      t.scale(Rational(marks_[x][y]));
      rhs -= t;
    }
    if (marks_[y][y] == 0) throw std::logic_error("singular table of marks");
    rhs.scale(Rational(1) / Rational(marks_[y][y]));
    coeffs[y] = rhs;
  }
  return coeffs;
}

std::vector<Rational> CharacterData::tensor(const std::vector<Rational>& a,
                                            const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tensor: size mismatch");
  std::vector<Rational> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

std::vector<Rational> CharacterData::induceValues(const CharacterData& sub,
                                                  const std::vector<Rational>& subValues) const {
  const CoxeterSystem& W = *G_->W;
  const SubSystem& H = sub.sub();
  std::vector<Rational> out(numClasses(), Rational(0));
  for (int y = 0; y < numClasses(); ++y) {
    ElemId w = classRep_[y];
    Rational sum = 0;
    for (ElemId x : G_->elems) {
      ElemId conj = W.mul(W.mul(W.inverse(x), w), x);
      if (!H.contains(conj)) continue;
      sum += subValues[sub.flats().orbitOf(conj)];
    }
    out[y] = sum / Rational(Int(H.size()));
  }
  return out;
}

Rational CharacterData::trivialMultiplicity(const std::vector<Rational>& values) const {
  Rational sum = 0;
  for (int y = 0; y < numClasses(); ++y) sum += Rational(flats_->classSize(y)) * values[y];
  return sum / Rational(Int(G_->size()));
}

bool CharacterData::marksTriangularCheck() const {
  for (int x = 0; x < numClasses(); ++x) {
    if (marks_[x][x] == 0) return false;
    for (int y = 0; y < x; ++y)
      if (marks_[x][y] != 0) return false;
  }
  return true;
}

bool CharacterData::psiExpansionCheck() const {
  auto coeffs = expandOverMarks(psiSymbolic());
  for (int x = 0; x < numClasses(); ++x) {
    UniPoly expect = flats_->charPoly(x);
    expect.scale(Rational(1) / Rational(flats_->normalizerIndex(x)));
    if (coeffs[x] != expect) return false;
  }
  return true;
}

bool CharacterData::solomonCheck() const {
  const CoxeterSystem& W = *G_->W;
  auto sign = signValues();
  int r = G_->rank();
  for (uint32_t J = 0; J < (1u << r); ++J) {
    // Phi_J: locate the orbit of the flat of c_J.
    ElemId cJ = W.identity();
    for (int i = 0; i < r; ++i)
      if (J & (1u << i)) cJ = W.mul(cJ, W.simple(G_->simples[i]));
    auto lhs = tensor(sign, phiValues(flats_->orbitOf(cJ)));
    std::vector<Rational> rhs(numClasses(), Rational(0));
    for (uint32_t I = J;; I = (I - 1) & J) {
      ElemId cI = W.identity();
      for (int i = 0; i < r; ++i)
        if (I & (1u << i)) cI = W.mul(cI, W.simple(G_->simples[i]));
      Rational s = __builtin_popcount(I) % 2 == 0 ? 1 : -1;
      auto phi = phiValues(flats_->orbitOf(cI));
      for (int y = 0; y < numClasses(); ++y) rhs[y] += s * phi[y];
      if (I == 0) break;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool CharacterData::signInductionCheck(const CharacterData& sub) const {
  // eps (x) ind(chi) == ind(eps_sub (x) chi) for chi = Phi_X of the
  // subsystem, every X.
  auto sign = signValues();
  auto subSign = sub.signValues();
  for (int x = 0; x < sub.numClasses(); ++x) {
    auto chi = sub.phiValues(x);
    auto lhs = tensor(sign, induceValues(sub, chi));
    auto rhs = induceValues(sub, CharacterData::tensor(subSign, chi));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace coxcat
