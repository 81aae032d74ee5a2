#include "coxcat/noncross.hpp"

#include <algorithm>
#include <functional>

namespace coxcat {

NCLattice::NCLattice(const SubSystem& G, const FlatTable& flats)
    : NCLattice(G, flats, G.c) {}

NCLattice::NCLattice(const SubSystem& G, const FlatTable& flats, ElemId c)
    : G_(&G), flats_(&flats), c_(c), bipartite_(c == G.c) {
  build();
}

void NCLattice::build() {
  const CoxeterSystem& W = *G_->W;
  int n = G_->rank();
  idxOf_.assign(W.order(), -1);
  for (ElemId w : G_->elems) {
    if (W.reflectionLength(w) + W.reflectionLength(W.mul(W.inverse(w), c_)) != n) continue;
    idxOf_[w] = int32_t(elem_.size());
    elem_.push_back(w);
    len_.push_back(W.reflectionLength(w));
    theta_.push_back(flats_->orbitOf(w));
  }
  int N = size();

  canon_.resize(N);
  for (int i = 0; i < N; ++i) {
    int flat = flats_->flatOf(elem_[i]);
    canon_[i] = factorize(elem_[i], flats_->parabolicSimples(flat));
  }

  leqUp_.assign(N, boost::dynamic_bitset<>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (len_[i] + W.reflectionLength(W.mul(W.inverse(elem_[i]), elem_[j])) == len_[j])
        leqUp_[i].set(j);

  subOf_.assign(N, boost::dynamic_bitset<>(N));
  for (int i = 0; i < N; ++i) {
    int k = int(canon_[i].size());
    for (uint32_t bits = 0; bits < (1u << k); ++bits) {
      ElemId p = W.identity();
      for (int j = 0; j < k; ++j)
        if (bits & (1u << j)) p = W.mul(p, W.reflection(canon_[i][j]));
      int idx = idxOf_[p];
      if (idx < 0) throw std::logic_error("subword product left the noncrossing lattice");
      subOf_[i].set(idx);
    }
  }

  llOf_.assign(N, boost::dynamic_bitset<>(N));
  for (int i = 0; i < N; ++i) {
    int flat = flats_->flatOf(elem_[i]);
    for (int j = 0; j < N; ++j)
      if (leqUp_[j][i] && fullSupportIn(elem_[j], flat)) llOf_[i].set(j);
  }
}

std::vector<int> NCLattice::factorize(ElemId w, const std::vector<int>& simples) const {
  const CoxeterSystem& W = *G_->W;
  int k = int(simples.size());
  std::vector<int> order;
  std::vector<char> used(k, 0);
  // Backtracking over orderings; a prefix is viable iff each factor drops the
  // reflection length of the remainder by one.
  std::function<bool(ElemId, int)> go = [&](ElemId rest, int remaining) {
    if (remaining == 0) return rest == W.identity();
    int lr = W.reflectionLength(rest);
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      ElemId next = W.mul(W.reflection(simples[j]), rest);
      if (W.reflectionLength(next) != lr - 1) continue;
      used[j] = 1;
      order.push_back(simples[j]);
      if (go(next, remaining - 1)) return true;
      order.pop_back();
      used[j] = 0;
    }
    return false;
  };
  if (!go(w, k)) throw std::logic_error("canonical factorization search failed");
  return order;
}

bool NCLattice::fullSupportIn(ElemId v, int flatOfTop) const {
  const CoxeterSystem& W = *G_->W;
  const std::vector<int>& simples = flats_->parabolicSimples(flatOfTop);
  int k = int(simples.size());
  if (W.reflectionLength(v) == 0) return k == 0;
  std::vector<Vec> basis;
  basis.reserve(k);
  for (int r : simples) basis.push_back(W.root(r));
  Echelon mov = W.movedSpace(v);
  std::vector<char> hit(k, 0);
  for (const Vec& row : mov.rows()) {
    auto coords = coordinatesIn(basis, row);
    if (!coords) throw std::logic_error("moved space escapes the parabolic span");
    for (int j = 0; j < k; ++j)
      if (!(*coords)[j].isZero()) hit[j] = 1;
  }
  for (int j = 0; j < k; ++j)
    if (!hit[j]) return false;
  return true;
}

int NCLattice::indexOf(ElemId w) const {
  int idx = idxOf_[w];
  if (idx < 0) throw std::invalid_argument("element is not a noncrossing partition");
  return idx;
}

bool NCLattice::contains(ElemId w) const { return idxOf_[w] >= 0; }

int NCLattice::supportSize(int i) const {
  return __builtin_popcount(G_->W->supportMask(elem_[i]));
}

bool NCLattice::fullSupport(int i) const {
  return G_->W->supportMask(elem_[i]) == G_->mask;
}

int NCLattice::uniqueMiddle(int u, int w) const {
  if (!leqUp_[u][w]) throw std::invalid_argument("uniqueMiddle requires u <= w");
  int found = -1;
  for (int v = 0; v < size(); ++v) {
    if (llOf_[v][u] && subOf_[w][v]) {
      if (found >= 0) throw std::logic_error("uniqueMiddle: middle element is not unique");
      found = v;
    }
  }
  if (found < 0) throw std::logic_error("uniqueMiddle: no middle element");
  return found;
}

int NCLattice::kreweras(int i) const {
  if (!bipartite_) throw std::logic_error("kreweras complement needs the bipartite element");
  const CoxeterSystem& W = *G_->W;
  return indexOf(W.mul(W.mul(G_->cPlus, elem_[i]), G_->cMinus));
}

Int NCLattice::chainCount(int m, const std::vector<char>& bottomAdmissible,
                          bool fullSupportTop) const {
  int N = size();
  std::vector<Int> cnt(N);
  for (int i = 0; i < N; ++i) cnt[i] = (!fullSupportTop || fullSupport(i)) ? 1 : 0;
  for (int step = 1; step < m; ++step) {
    std::vector<Int> nxt(N, Int(0));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (leqUp_[i][j]) nxt[i] += cnt[j];
    cnt = nxt;
  }
  Int total = 0;
  for (int i = 0; i < N; ++i)
    if (bottomAdmissible[i]) total += cnt[i];
  return total;
}

std::vector<Int> NCLattice::kappaCensus(int m) const {
  std::vector<Int> out(flats_->numOrbits(), Int(0));
  for (int k = 0; k < flats_->numOrbits(); ++k) {
    std::vector<char> adm(size(), 0);
    for (int i = 0; i < size(); ++i) adm[i] = theta_[i] == k;
    out[k] = chainCount(m, adm, false);
  }
  return out;
}

std::vector<Int> NCLattice::kappaPlusCensus(int m) const {
  std::vector<Int> out(flats_->numOrbits(), Int(0));
  for (int k = 0; k < flats_->numOrbits(); ++k) {
    std::vector<char> adm(size(), 0);
    for (int i = 0; i < size(); ++i) adm[i] = theta_[i] == k;
    out[k] = chainCount(m, adm, true);
  }
  return out;
}

UniPoly NCLattice::kappaPoly(int orbit) const {
  std::vector<char> adm(size(), 0);
  for (int i = 0; i < size(); ++i) adm[i] = theta_[i] == orbit;
  return kappaPolyFor(adm);
}

UniPoly NCLattice::kappaPolyFor(const std::vector<char>& bottomAdmissible) const {
  const CoxeterSystem& W = *G_->W;
  UniPoly mMinus1(Var::m, {Rational(-1), Rational(1)});
  UniPoly total(Var::m);
  for (int i = 0; i < size(); ++i) {
    if (!bottomAdmissible[i]) continue;
    ElemId comp = W.mul(W.inverse(elem_[i]), c_);
    const CoxeterType& t = flats_->orbitType(flats_->orbitOf(comp));
    total += t.catalanPoly().compose(mMinus1);
  }
  return total;
}

std::vector<Int> NCLattice::narayanaCensus(int m) const {
  std::vector<Int> out(G_->rank() + 1, Int(0));
  for (int k = 0; k <= G_->rank(); ++k) {
    std::vector<char> adm(size(), 0);
    for (int i = 0; i < size(); ++i) adm[i] = len_[i] == k;
    out[k] = chainCount(m, adm, false);
  }
  return out;
}

std::vector<Int> NCLattice::narayanaPlusCensus(int m) const {
  std::vector<Int> out(G_->rank() + 1, Int(0));
  for (int k = 0; k <= G_->rank(); ++k) {
    std::vector<char> adm(size(), 0);
    for (int i = 0; i < size(); ++i) adm[i] = len_[i] == k;
    out[k] = chainCount(m, adm, true);
  }
  return out;
}

bool NCLattice::booleanIntervalCheck() const {
  for (int i = 0; i < size(); ++i) {
    if (Int(subOf_[i].count()) != Int(1) << len_[i]) return false;
    size_t above = 0;
    for (int j = 0; j < size(); ++j)
      if (llOf_[j][i]) ++above;
    if (Int(above) != Int(1) << (supportSize(i) - len_[i])) return false;
  }
  return true;
}

bool NCLattice::uniqueMiddleCheck() const {
  for (int u = 0; u < size(); ++u)
    for (int w = 0; w < size(); ++w) {
      if (!leqUp_[u][w]) continue;
      int found = 0;
      for (int v = 0; v < size(); ++v)
        if (llOf_[v][u] && subOf_[w][v]) ++found;
      if (found != 1) return false;
    }
  return true;
}

bool NCLattice::krewerasCheck() const {
  for (int i = 0; i < size(); ++i) {
    int k = kreweras(i);
    if (len_[k] != G_->rank() - len_[i]) return false;
    if (kreweras(k) != i) return false;
  }
  // Anti-automorphism on all comparable pairs.
  for (int u = 0; u < size(); ++u)
    for (int v = 0; v < size(); ++v)
      if (leqUp_[u][v] && !leqUp_[kreweras(v)][kreweras(u)]) return false;
  return true;
}

ThetaMatrices ThetaMatrices::build(const NCLattice& nc) {
  const FlatTable& flats = nc.flats();
  int K = flats.numOrbits();
  ThetaMatrices tm;
  tm.Q.assign(K, std::vector<Int>(K, Int(0)));
  tm.R.assign(K, std::vector<Int>(K, Int(0)));
  tm.N.assign(K, std::vector<Int>(K, Int(0)));
  tm.D.assign(K, Int(0));
  tm.U.assign(K, Int(0));
  for (int k = 0; k < K; ++k)
    tm.D[k] = (nc.sub().rank() - flats.orbitDim(k)) % 2 == 0 ? 1 : -1;
  tm.U[flats.topOrbit()] = 1;

  for (int y = 0; y < K; ++y) {
    std::vector<int> reps;
    for (int i = 0; i < nc.size() && int(reps.size()) < 2; ++i)
      if (nc.theta(i) == y) reps.push_back(i);
    if (reps.empty())
      throw std::logic_error("orbit without noncrossing representative");
    bool first = true;
    for (int w : reps) {
      std::vector<Int> q(K, Int(0)), r(K, Int(0)), nn(K, Int(0));
      for (int v = 0; v < nc.size(); ++v) {
        if (nc.leq(v, w)) ++q[nc.theta(v)];
        if (nc.fullBelow(v, w)) ++r[nc.theta(v)];
        if (nc.subword(v, w)) ++nn[nc.theta(v)];
      }
      if (first) {
        for (int x = 0; x < K; ++x) {
          tm.Q[x][y] = q[x];
          tm.R[x][y] = r[x];
          tm.N[x][y] = nn[x];
        }
        first = false;
      } else {
        for (int x = 0; x < K; ++x)
          if (tm.Q[x][y] != q[x] || tm.R[x][y] != r[x] || tm.N[x][y] != nn[x])
            throw std::logic_error("matrix column depends on the class representative");
      }
    }
  }
  return tm;
}

std::vector<std::vector<Int>> ThetaMatrices::mul(const std::vector<std::vector<Int>>& a,
                                                 const std::vector<std::vector<Int>>& b) {
  int K = int(a.size());
  std::vector<std::vector<Int>> r(K, std::vector<Int>(K, Int(0)));
  for (int i = 0; i < K; ++i)
    for (int k = 0; k < K; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < K; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

std::vector<Int> ThetaMatrices::apply(const std::vector<std::vector<Int>>& a,
                                      const std::vector<Int>& v) {
  int K = int(a.size());
  std::vector<Int> r(K, Int(0));
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) r[i] += a[i][j] * v[j];
  return r;
}

std::vector<std::vector<Int>> ThetaMatrices::scaledByD(const std::vector<std::vector<Int>>& a,
                                                       bool left) const {
  auto r = a;
  int K = int(a.size());
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) r[i][j] *= left ? D[i] : D[j];
  return r;
}

std::vector<Int> ThetaMatrices::parkVector(int m) const {
  std::vector<Int> v = U;
  for (int i = 0; i < m; ++i) v = apply(Q, v);
  return v;
}

std::vector<Int> ThetaMatrices::parkPrimeVector(int m) const {
  std::vector<Int> v = apply(R, U);
  for (int i = 0; i < m - 1; ++i) v = apply(Q, v);
  return v;
}

}  // namespace coxcat
