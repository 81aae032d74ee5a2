#include "coxcat/flats.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace coxcat {

FlatTable::FlatTable(const SubSystem& G) : G_(&G), rank_(G.rank()) {
  const CoxeterSystem& W = *G.W;
  elemFlat_.assign(G.size(), -1);
  for (size_t i = 0; i < G.elems.size(); ++i) {
    ElemId w = G.elems[i];
    Echelon mov = W.movedSpace(w);
    std::vector<int> rs;
    for (int r : G.posRoots)
      if (mov.inSpan(W.root(r))) rs.push_back(r);
    auto it = flatIndex_.find(rs);
    if (it == flatIndex_.end()) {
      it = flatIndex_.emplace(rs, int(reflSet_.size())).first;
      reflSet_.push_back(rs);
      dim_.push_back(rank_ - mov.rank());
    }
    elemFlat_[i] = it->second;
  }

  int F = numFlats();
  above_.assign(F, boost::dynamic_bitset<>(F));
  for (int x = 0; x < F; ++x)
    for (int y = 0; y < F; ++y)
      if (std::includes(reflSet_[y].begin(), reflSet_[y].end(), reflSet_[x].begin(),
                        reflSet_[x].end()))
        above_[x].set(y);

  computeParabolicSimples();
  computeOrbits();
  computeOrbitData();
}

int FlatTable::flatOf(ElemId w) const {
  int local = G_->local(w);
  if (local < 0) throw std::invalid_argument("flatOf: element outside subsystem");
  return elemFlat_[local];
}

int FlatTable::conjugateFlat(ElemId w, int flat) const {
  std::vector<int> img;
  img.reserve(reflSet_[flat].size());
  for (int t : reflSet_[flat]) img.push_back(G_->W->conjugateReflection(w, t));
  std::sort(img.begin(), img.end());
  auto it = flatIndex_.find(img);
  if (it == flatIndex_.end()) throw std::logic_error("conjugateFlat: image is not a flat");
  return it->second;
}

std::vector<int> FlatTable::parabolicMembers(int flat) const {
  std::vector<int> out;
  for (size_t i = 0; i < G_->elems.size(); ++i)
    if (above_[elemFlat_[i]][flat]) out.push_back(int(i));
  return out;
}

bool FlatTable::memberOfParabolic(ElemId w, int flat) const {
  int local = G_->local(w);
  return local >= 0 && above_[elemFlat_[local]][flat];
}

void FlatTable::computeParabolicSimples() {
  const CoxeterSystem& W = *G_->W;
  parabSimples_.assign(numFlats(), {});
  for (int f = 0; f < numFlats(); ++f) {
    const std::vector<int>& rs = reflSet_[f];
    std::vector<char> inSet(W.numPositive(), 0);
    for (int r : rs) inSet[r] = 1;
    for (int beta : rs) {
      // beta is simple iff its reflection keeps every other root of the
      // parabolic positive.
      bool simple = true;
      for (int gamma : rs) {
        if (gamma == beta) continue;
        int img = W.act(W.reflection(beta), gamma);
        if (!W.isPositive(img)) {
          simple = false;
          break;
        }
        if (!inSet[img]) throw std::logic_error("parabolic root set not closed");
      }
      if (simple) parabSimples_[f].push_back(beta);
    }
    if (int(parabSimples_[f].size()) != rank_ - dim_[f])
      throw std::logic_error("parabolic simple system has wrong size");
  }
}

void FlatTable::computeOrbits() {
  int F = numFlats();
  orbitOf_.assign(F, -1);
  std::vector<std::vector<int>> members;
  for (int f = 0; f < F; ++f) {
    if (orbitOf_[f] >= 0) continue;
    int id = int(members.size());
    std::deque<int> q = {f};
    orbitOf_[f] = id;
    std::vector<int> orb = {f};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int j : G_->simples) {
        int y = conjugateFlat(G_->W->simple(j), x);
        if (orbitOf_[y] < 0) {
          orbitOf_[y] = id;
          orb.push_back(y);
          q.push_back(y);
        }
      }
    }
    members.push_back(orb);
  }
  // Canonical representative: lexicographically least reflection set, then
  // orbits ordered by (dim ascending, representative ascending).
  int K = int(members.size());
  std::vector<int> rep(K);
  for (int k = 0; k < K; ++k) {
    int best = members[k][0];
    for (int f : members[k])
      if (reflSet_[f] < reflSet_[best]) best = f;
    rep[k] = best;
  }
  std::vector<int> order(K);
  for (int k = 0; k < K; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dim_[rep[a]] != dim_[rep[b]]) return dim_[rep[a]] < dim_[rep[b]];
    return reflSet_[rep[a]] < reflSet_[rep[b]];
  });
  std::vector<int> newId(K);
  for (int k = 0; k < K; ++k) newId[order[k]] = k;
  orbitRep_.assign(K, -1);
  orbitSize_.assign(K, 0);
  for (int f = 0; f < F; ++f) {
    orbitOf_[f] = newId[orbitOf_[f]];
    ++orbitSize_[orbitOf_[f]];
  }
  for (int k = 0; k < K; ++k) orbitRep_[newId[k]] = rep[k];
}

void FlatTable::computeOrbitData() {
  const CoxeterSystem& W = *G_->W;
  int K = numOrbits();
  orbitType_.resize(K);
  label_.resize(K);
  parabolicOrder_.assign(K, 1);
  normalizerIndex_.assign(K, 1);
  classSize_.assign(K, 0);
  nu_.assign(K, 0);
  charPoly_.assign(K, UniPoly(Var::t));
  osExponents_.resize(K);

  for (size_t i = 0; i < G_->elems.size(); ++i) classSize_[orbitOf_[elemFlat_[i]]] += 1;

  for (int k = 0; k < K; ++k) {
    int f = orbitRep_[k];
    const auto& ps = parabSimples_[f];
    int r = int(ps.size());
    std::vector<std::vector<int>> cm(r, std::vector<int>(r, 1));
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        // order of t_i t_j
        ElemId prod = W.mul(W.reflection(ps[i]), W.reflection(ps[j]));
        int ord = 1;
        ElemId p = prod;
        while (p != W.identity()) {
          p = W.mul(p, prod);
          ++ord;
        }
        cm[i][j] = cm[j][i] = ord;
      }
    orbitType_[k] = r == 0 ? CoxeterType{} : classifyCoxeterMatrix(cm);
    parabolicOrder_[k] = r == 0 ? Int(1) : orbitType_[k].order();

    Int stab = Int(G_->size()) / orbitSize_[k];
    if (stab * orbitSize_[k] != Int(G_->size()))
      throw std::logic_error("orbit size does not divide group order");
    normalizerIndex_[k] = stab / parabolicOrder_[k];

    charPoly_[k] = charPolyAt(f);
    osExponents_[k] = charPoly_[k].integerRoots();
    for (const Int& b : osExponents_[k])
      if (b <= 0) throw std::logic_error("nonpositive Orlik-Solomon exponent");

    if (dim_[f] == 0) topOrbit_ = k;
    if (dim_[f] == rank_) bottomOrbit_ = k;
  }

  // nu: standard subsets J with W_J in the orbit.
  int r = rank_;
  for (uint32_t bits = 0; bits < (1u << r); ++bits) {
    ElemId cJ = W.identity();
    for (int i = 0; i < r; ++i)
      if (bits & (1u << i)) cJ = W.mul(cJ, W.simple(G_->simples[i]));
    ++nu_[orbitOf(cJ)];
  }

  // Labels: Coxeter type, primes distinguishing repeated types.
  std::map<std::string, int> seen;
  for (int k = 0; k < K; ++k) {
    std::string base = orbitType_[k].factors.empty() ? "1" : orbitType_[k].str();
    int count = seen[base]++;
    label_[k] = base + std::string(count, '\'');
  }
}

Int FlatTable::mobius(int x, int y) const {
  if (!above_[x][y]) throw std::invalid_argument("mobius: incomparable pair");
  if (x == y) return 1;
  auto key = std::make_pair(x, y);
  auto it = mobiusMemo_.find(key);
  if (it != mobiusMemo_.end()) return it->second;
  Int s = 0;
  for (int z = 0; z < numFlats(); ++z)
    if (above_[x][z] && above_[z][y] && z != y) s += mobius(x, z);
  Int v = -s;
  mobiusMemo_.emplace(key, v);
  return v;
}

UniPoly FlatTable::charPolyAt(int flat) const {
  std::vector<Rational> coeffs(dim_[flat] + 1, Rational(0));
  for (int y = 0; y < numFlats(); ++y)
    if (above_[flat][y]) coeffs[dim_[y]] += Rational(mobius(flat, y));
  UniPoly p(Var::t, coeffs);
  if (p.degree() != dim_[flat]) throw std::logic_error("characteristic polynomial degree");
  return p;
}

UniPoly FlatTable::kappaClosedPoly(int orbit) const {
  int h = G_->coxeterNumber();
  UniPoly arg(Var::m, {Rational(1), Rational(h)});  // mh + 1
  UniPoly p = charPoly_[orbit].compose(arg);
  p.scale(Rational(1) / Rational(normalizerIndex_[orbit]));
  return p;
}

UniPoly FlatTable::kappaPlusClosedPoly(int orbit) const {
  int h = G_->coxeterNumber();
  UniPoly arg(Var::m, {Rational(-1), Rational(h)});  // mh - 1
  UniPoly p = charPoly_[orbit].compose(arg);
  p.scale(Rational(1) / Rational(normalizerIndex_[orbit]));
  return p;
}

UniPoly FlatTable::gammaClosedPoly(int orbit) const {
  int h = G_->coxeterNumber();
  UniPoly arg(Var::m, {Rational(-1), Rational(-h)});  // -mh - 1
  UniPoly p = charPoly_[orbit].compose(arg);
  Rational sign = orbitDim(orbit) % 2 == 0 ? 1 : -1;
  p.scale(sign / Rational(normalizerIndex_[orbit]));
  return p;
}

UniPoly FlatTable::gammaPlusClosedPoly(int orbit) const {
  int h = G_->coxeterNumber();
  UniPoly arg(Var::m, {Rational(1), Rational(-h)});  // -mh + 1
  UniPoly p = charPoly_[orbit].compose(arg);
  Rational sign = orbitDim(orbit) % 2 == 0 ? 1 : -1;
  p.scale(sign / Rational(normalizerIndex_[orbit]));
  return p;
}

bool FlatTable::shephardToddCheck() const {
  UniPoly lhs(Var::t, std::vector<Rational>(rank_ + 1, Rational(0)));
  std::vector<Rational> acc(rank_ + 1, Rational(0));
  for (size_t i = 0; i < G_->elems.size(); ++i) acc[dim_[elemFlat_[i]]] += 1;
  lhs = UniPoly(Var::t, acc);
  UniPoly rhs = UniPoly::constant(Var::t, 1);
  for (const Int& e : exponents()) rhs *= UniPoly(Var::t, {Rational(e), Rational(1)});
  return lhs == rhs;
}

bool FlatTable::factorNuCheck() const {
  for (int k = 0; k < numOrbits(); ++k) {
    Rational lhs = Rational(1) / Rational(normalizerIndex_[k]);
    Rational denom = 1;
    for (const Int& b : osExponents_[k]) denom *= Rational(b + 1);
    if (lhs != Rational(nu_[k]) / denom) return false;
  }
  return true;
}

bool FlatTable::regionCountCheck() const {
  for (int k = 0; k < numOrbits(); ++k) {
    Rational val = charPoly_[k].eval(Rational(-1));
    if (orbitDim(k) % 2 != 0) val = -val;
    if (val != Rational(nu_[k]) * Rational(normalizerIndex_[k])) return false;
  }
  return true;
}

std::vector<std::pair<std::vector<int>, int>> FlatTable::componentsOf(int flat) const {
  // Components of the parabolic simple system, each with its Coxeter number.
  const CoxeterSystem& W = *G_->W;
  const auto& ps = parabSimples_[flat];
  int r = int(ps.size());
  std::vector<int> comp(r, -1);
  std::vector<std::pair<std::vector<int>, int>> out;
  for (int s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> q = {s};
    comp[s] = s;
    std::vector<int> vs;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      vs.push_back(ps[v]);
      for (int j = 0; j < r; ++j) {
        if (comp[j] >= 0) continue;
        ElemId prod = W.mul(W.reflection(ps[v]), W.reflection(ps[j]));
        ElemId p = prod;
        int ord = 1;
        while (p != W.identity()) {
          p = W.mul(p, prod);
          ++ord;
        }
        if (ord > 2) {
          comp[j] = s;
          q.push_back(j);
        }
      }
    }
    // Count reflections of the flat lying in this component's span.
    Echelon span(W.rank());
    for (int root : vs) span.addRow(W.root(root));
    int cnt = 0;
    for (int t : reflSet_[flat])
      if (span.inSpan(W.root(t))) ++cnt;
    out.push_back({vs, 2 * cnt / int(vs.size())});
  }
  return out;
}

std::vector<int> FlatTable::coxeterNumberMultiset(int x, int z) const {
  if (!above_[z][x])
    throw std::invalid_argument("coxeterNumberMultiset: flats are not subspace-nested");
  const CoxeterSystem& W = *G_->W;
  std::vector<int> ms;
  int total = 0;
  for (const auto& [vs, h] : componentsOf(x)) {
    Echelon span(W.rank());
    for (int root : vs) span.addRow(W.root(root));
    Echelon zin(W.rank());
    int zrank = 0;
    for (int t : reflSet_[z])
      if (span.inSpan(W.root(t)) && zin.addRow(W.root(t))) ++zrank;
    int dimZj = int(vs.size()) - zrank;
    for (int i = 0; i < dimZj; ++i) ms.push_back(h);
    total += dimZj;
  }
  if (total != dim_[z] - dim_[x])
    throw std::logic_error("coxeterNumberMultiset: dimension bookkeeping failed");
  std::sort(ms.begin(), ms.end());
  return ms;
}

bool FlatTable::laplacianRecursionCheck(int x, int z) const {
  UniPoly lhs = UniPoly::constant(Var::t, 1);
  for (int h : coxeterNumberMultiset(x, z)) lhs *= UniPoly(Var::t, {Rational(h), Rational(1)});
  UniPoly rhs(Var::t);
  for (int y = 0; y < numFlats(); ++y) {
    if (!(above_[z][y] && above_[y][x])) continue;
    Rational prod = 1;
    for (int h : coxeterNumberMultiset(y, z)) prod *= h;
    std::vector<Rational> mono(dim_[y] - dim_[x] + 1, Rational(0));
    mono[dim_[y] - dim_[x]] = prod;
    rhs += UniPoly(Var::t, mono);
  }
  return lhs == rhs;
}

bool FlatTable::regionsIdentityCheck(int z) const {
  int h = G_->coxeterNumber();
  UniPoly lhs = UniPoly::constant(Var::m, 1);
  for (int i = 0; i < dim_[z]; ++i) lhs *= UniPoly(Var::m, {Rational(1), Rational(h)});
  UniPoly rhs(Var::m);
  for (int x = 0; x < numFlats(); ++x) {
    if (!above_[z][x]) continue;
    int k = orbitOf_[x];
    UniPoly term =
        UniPoly::constant(Var::m, Rational(nu_[k]) * Rational(normalizerIndex_[k]));
    for (int hi : coxeterNumberMultiset(x, z))
      term *= UniPoly(Var::m, {Rational(-1), Rational(hi)});
    rhs += term;
  }
  return lhs == rhs;
}

std::vector<int> FlatTable::exponentLevels() const {
  std::vector<Int> es = exponents();
  std::vector<int> levels;
  for (const Int& e : es) {
    int level = rank_;
    for (int k = rank_; k >= 1; --k) {
      bool everywhere = true;
      for (int orb = 0; orb < numOrbits() && everywhere; ++orb) {
        if (orbitDim(orb) < k) continue;
        const auto& os = osExponents_[orb];
        if (std::find(os.begin(), os.end(), e) == os.end()) everywhere = false;
      }
      if (everywhere)
        level = k;
      else
        break;
    }
    levels.push_back(level);
  }
  return levels;
}

}  // namespace coxcat
