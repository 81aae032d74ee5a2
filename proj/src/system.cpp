#include "coxcat/system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace coxcat {

CoxeterSystem::CoxeterSystem(const CoxeterType& t) : type_(t), n_(t.rank()) {
  // Assemble the block-diagonal Coxeter matrix and locate factor membership.
  coxmat_.assign(n_, std::vector<int>(n_, 2));
  factorOfSimple_.assign(n_, 0);
  int base = 0, fi = 0;
  for (const auto& f : type_.factors) {
    auto m = f.coxeterMatrix();
    for (int i = 0; i < f.rank; ++i) {
      factorOfSimple_[base + i] = fi;
      for (int j = 0; j < f.rank; ++j) coxmat_[base + i][base + j] = m[i][j];
    }
    base += f.rank;
    ++fi;
  }
  buildGram();
  closeRoots();
  buildReflections();
  bipartition();
}

void CoxeterSystem::buildGram() {
  std::vector<Rational> norms;
  for (const auto& f : type_.factors) {
    auto fn = f.norms();
    norms.insert(norms.end(), fn.begin(), fn.end());
  }
  // One algebraic generator per system: every equal-norm bond m >= 4
  // contributes theta_m = 2cos(pi/m); all generators must agree.
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      int m = coxmat_[i][j];
      if (m < 4 || norms[i] != norms[j]) continue;
      const NumberField* f = fieldFor(m);
      if (!f) continue;
      if (field_ && field_ != f)
        throw std::invalid_argument("incompatible algebraic fields in product type " +
                                    type_.str() + " (" + field_->name + " vs " + f->name + ")");
      field_ = f;
    }

  gram_.assign(n_, Vec(n_, Scalar(Rational(0))));
  for (int i = 0; i < n_; ++i) gram_[i][i] = Scalar(norms[i]);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      int m = coxmat_[i][j];
      Scalar v(Rational(0));
      if (m == 2) {
        v = Scalar(Rational(0));
      } else if (norms[i] == norms[j] && norms[i] == 2) {
        // -2cos(pi/m), the generator itself for m >= 4.
        const NumberField* f = fieldFor(m);
        if (f)
          v = -Scalar::theta(f);
        else
          v = Scalar(m == 3 ? Rational(-1) : Rational(0));
      } else if (norms[i] == norms[j] && norms[i] == 1) {
        if (m != 3) throw std::logic_error("unexpected short-short bond");
        v = Scalar(Rational(-1, 2));
      } else {
        // Mixed lengths occur only at the 4-bonds of B_n / F4.
        if (m != 4) throw std::logic_error("unexpected mixed-length bond");
        v = Scalar(Rational(-1));
      }
      gram_[i][j] = gram_[j][i] = v;
    }
}

Scalar CoxeterSystem::inner(const Vec& a, const Vec& b) const {
  Scalar s(Rational(0));
  for (int i = 0; i < n_; ++i) {
    if (a[i].isZero()) continue;
    for (int j = 0; j < n_; ++j)
      if (!b[j].isZero()) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

Vec CoxeterSystem::reflectVector(int j, const Vec& v) const {
  // Simple reflection s_j in simple-root coordinates touches one coordinate.
  Scalar ip(Rational(0));
  for (int k = 0; k < n_; ++k)
    if (!v[k].isZero()) ip += gram_[j][k] * v[k];
  Vec r = v;
  r[j] -= Scalar(Rational(2)) / gram_[j][j] * ip;
  return r;
}

void CoxeterSystem::closeRoots() {
  std::map<Vec, int, ScalarStructLess> seen;
  std::vector<Vec> all;
  std::deque<int> work;
  for (int j = 0; j < n_; ++j) {
    Vec e(n_, Scalar(Rational(0)));
    e[j] = Scalar(Rational(1));
    seen.emplace(e, int(all.size()));
    all.push_back(e);
    work.push_back(j);
  }
  while (!work.empty()) {
    int idx = work.front();
    work.pop_front();
    for (int j = 0; j < n_; ++j) {
      Vec img = reflectVector(j, all[idx]);
      if (seen.find(img) == seen.end()) {
        seen.emplace(img, int(all.size()));
        all.push_back(img);
        work.push_back(int(all.size()) - 1);
      }
    }
  }
  // Split by sign and order positives canonically.
  std::vector<Vec> pos;
  for (auto& [v, idx] : seen) {
    int sgn = 0;
    for (const auto& c : v) {
      int s = c.sign();
      if (s == 0) continue;
      if (sgn == 0) sgn = s;
      if (s != sgn) throw std::logic_error("root with mixed coordinate signs");
    }
    if (sgn > 0) pos.push_back(v);
  }
  std::sort(pos.begin(), pos.end(), ScalarStructLess());
  npos_ = int(pos.size());
  if (int(seen.size()) != 2 * npos_) throw std::logic_error("root set is not symmetric");
  roots_ = pos;
  roots_.resize(2 * npos_);
  for (int i = 0; i < npos_; ++i) {
    Vec neg = pos[i];
    for (auto& c : neg) c = -c;
    roots_[npos_ + i] = neg;
  }
  simpleRoot_.assign(n_, -1);
  rootSimple_.assign(2 * npos_, -1);
  for (int i = 0; i < npos_; ++i) {
    int support = -1, cnt = 0;
    for (int j = 0; j < n_; ++j)
      if (!roots_[i][j].isZero()) {
        support = j;
        ++cnt;
      }
    if (cnt == 1 && roots_[i][support] == Scalar(Rational(1))) {
      simpleRoot_[support] = i;
      rootSimple_[i] = support;
    }
  }
  for (int j = 0; j < n_; ++j)
    if (simpleRoot_[j] < 0) throw std::logic_error("missing simple root after closure");

  int expected = 0;
  for (const auto& f : type_.factors) expected += f.numReflections();
  if (npos_ != expected)
    throw std::logic_error("root closure size mismatch for " + type_.str());
}

void CoxeterSystem::buildReflections() {
  std::map<Vec, int, ScalarStructLess> lookup;
  for (int i = 0; i < 2 * npos_; ++i) lookup.emplace(roots_[i], i);
  reflPerm_.assign(npos_, Perm(2 * npos_));
  for (int k = 0; k < npos_; ++k) {
    const Vec& beta = roots_[k];
    Scalar bb = inner(beta, beta);
    for (int r = 0; r < 2 * npos_; ++r) {
      Scalar c = Scalar(Rational(2)) * inner(roots_[r], beta) / bb;
      Vec img = roots_[r];
      for (int j = 0; j < n_; ++j) img[j] -= c * beta[j];
      auto it = lookup.find(img);
      if (it == lookup.end()) throw std::logic_error("reflection image is not a root");
      reflPerm_[k][r] = uint16_t(it->second);
    }
  }
}

void CoxeterSystem::bipartition() {
  color_.assign(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (color_[s] >= 0) continue;
    color_[s] = 0;  // lowest-index simple of each component lands in S+
    std::deque<int> q = {s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int j = 0; j < n_; ++j)
        if (coxmat_[v][j] > 2) {
          if (color_[j] < 0) {
            color_[j] = 1 - color_[v];
            q.push_back(j);
          } else if (color_[j] == color_[v]) {
            throw std::logic_error("Coxeter graph is not bipartite");
          }
        }
    }
  }
  for (int j = 0; j < n_; ++j) (color_[j] == 0 ? plus_ : minus_).push_back(j);
}

int CoxeterSystem::coxeterNumberOf(int j) const {
  return type_.factors[factorOfSimple_[j]].coxeterNumber();
}

void CoxeterSystem::enumerate(bool allowHeavy) {
  if (enumerated()) return;
  if (type_.heavy() && !allowHeavy)
    throw std::runtime_error("group " + type_.str() +
                             " is in the heavy tier; pass the heavy flag to enumerate it");

  Perm id(2 * npos_);
  for (int i = 0; i < 2 * npos_; ++i) id[i] = uint16_t(i);
  elems_.push_back(id);
  index_.emplace(id, 0);
  coxLen_.push_back(0);
  std::deque<ElemId> work = {0};
  while (!work.empty()) {
    ElemId w = work.front();
    work.pop_front();
    for (int j = 0; j < n_; ++j) {
      const Perm& pw = elems_[w];
      const Perm& ps = reflPerm_[simpleRoot_[j]];
      Perm p(2 * npos_);
      for (int r = 0; r < 2 * npos_; ++r) p[r] = pw[ps[r]];
      if (index_.find(p) == index_.end()) {
        ElemId nw = ElemId(elems_.size());
        index_.emplace(p, nw);
        int len = 0;
        for (int r = 0; r < npos_; ++r)
          if (p[r] >= npos_) ++len;
        elems_.push_back(std::move(p));
        coxLen_.push_back(len);
        work.push_back(nw);
      }
    }
  }
  if (Int(elems_.size()) != type_.order())
    throw std::logic_error("group order mismatch for " + type_.str());

  eId_ = 0;
  simpleElem_.assign(n_, 0);
  for (int j = 0; j < n_; ++j) simpleElem_[j] = lookup(reflPerm_[simpleRoot_[j]]);
  reflElem_.assign(npos_, 0);
  for (int k = 0; k < npos_; ++k) reflElem_[k] = lookup(reflPerm_[k]);

  inv_.assign(elems_.size(), 0);
  for (ElemId w = 0; w < elems_.size(); ++w) {
    Perm p(2 * npos_);
    for (int r = 0; r < 2 * npos_; ++r) p[elems_[w][r]] = uint16_t(r);
    inv_[w] = lookup(p);
  }

  suppMask_.assign(elems_.size(), 0);
  for (ElemId w = 0; w < elems_.size(); ++w) {
    uint32_t mask = 0;
    for (int j = 0; j < n_; ++j) {
      const Vec& img = roots_[elems_[w][simpleRoot_[j]]];
      for (int i = 0; i < n_; ++i) {
        if (i == j) {
          if (img[i] != Scalar(Rational(1))) mask |= 1u << i;
        } else if (!img[i].isZero()) {
          mask |= 1u << i;
        }
      }
    }
    suppMask_[w] = mask;
  }
  reflLen_.assign(elems_.size(), -1);

  cPlusId_ = eId_;
  for (int j : plus_) cPlusId_ = mul(cPlusId_, simpleElem_[j]);
  cMinusId_ = eId_;
  for (int j : minus_) cMinusId_ = mul(cMinusId_, simpleElem_[j]);
  cId_ = mul(cPlusId_, cMinusId_);

  h_ = 1;
  ElemId p = cId_;
  while (p != eId_) {
    p = mul(p, cId_);
    ++h_;
    if (h_ > 100000) throw std::logic_error("runaway Coxeter element order");
  }

  w0Id_ = eId_;
  for (ElemId w = 0; w < elems_.size(); ++w)
    if (coxLen_[w] == npos_) w0Id_ = w;
}

ElemId CoxeterSystem::mul(ElemId a, ElemId b) const {
  const Perm& pa = elems_[a];
  const Perm& pb = elems_[b];
  Perm p(pa.size());
  for (size_t r = 0; r < pa.size(); ++r) p[r] = pa[pb[r]];
  return lookup(p);
}

ElemId CoxeterSystem::lookup(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::logic_error("permutation is not a group element");
  return it->second;
}

Echelon CoxeterSystem::movedSpace(ElemId w) const {
  Echelon e(n_);
  for (int j = 0; j < n_; ++j) {
    Vec col = roots_[elems_[w][simpleRoot_[j]]];
    col[j] -= Scalar(Rational(1));
    e.addRow(std::move(col));
  }
  return e;
}

int CoxeterSystem::reflectionLength(ElemId w) const {
  int& slot = reflLen_[w];
  if (slot < 0) slot = movedSpace(w).rank();
  return slot;
}

ElemId CoxeterSystem::productOfReflections(const std::vector<int>& word) const {
  ElemId r = eId_;
  for (int k : word) r = mul(r, reflElem_[k]);
  return r;
}

}  // namespace coxcat
