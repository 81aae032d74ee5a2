#pragma once

#include "coxcat/linalg.hpp"
#include "coxcat/types.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace coxcat {

using ElemId = uint32_t;
using Perm = std::vector<uint16_t>;

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A finite real reflection group realized on its root system. Roots are
/// stored in simple-root coordinates; positive roots occupy indices
/// [0, npos) and -root(i) sits at index i +- npos. Reflection k is the
/// reflection in positive root k. Elements are permutations of the root set,
/// interned with dense ids after enumerate().
class CoxeterSystem {
 public:
  explicit CoxeterSystem(const CoxeterType& t);
  static CoxeterSystem fromString(const std::string& s) {
    return CoxeterSystem(CoxeterType::parse(s));
  }

  const CoxeterType& type() const { return type_; }
  int rank() const { return n_; }
  const NumberField* field() const { return field_; }
  const std::vector<std::vector<int>>& coxeterMatrix() const { return coxmat_; }
  const Mat& gram() const { return gram_; }

  int numRoots() const { return 2 * npos_; }
  int numPositive() const { return npos_; }
  const Vec& root(int r) const { return roots_[r]; }
  int negate(int r) const { return r < npos_ ? r + npos_ : r - npos_; }
  bool isPositive(int r) const { return r < npos_; }
  int simpleRoot(int j) const { return simpleRoot_[j]; }
  /// Index of the simple root equal to root r, or -1.
  int simpleIndexOfRoot(int r) const { return rootSimple_[r]; }
  Scalar inner(const Vec& a, const Vec& b) const;

  // ---- bipartition & distinguished elements (valid after enumerate) ----
  int color(int j) const { return color_[j]; }  // 0 = S+, 1 = S-
  const std::vector<int>& plusSimples() const { return plus_; }
  const std::vector<int>& minusSimples() const { return minus_; }
  int coxeterNumberOf(int j) const;  // h of the irreducible factor containing s_j

  // ---- group ----
  void enumerate(bool allowHeavy = false);
  bool enumerated() const { return !elems_.empty(); }
  size_t order() const { return elems_.size(); }
  const Perm& perm(ElemId w) const { return elems_[w]; }
  ElemId identity() const { return eId_; }
  ElemId simple(int j) const { return simpleElem_[j]; }
  ElemId reflection(int k) const { return reflElem_[k]; }
  ElemId coxeter() const { return cId_; }       // bipartite Coxeter element
  ElemId coxeterPlus() const { return cPlusId_; }
  ElemId coxeterMinus() const { return cMinusId_; }
  ElemId longest() const { return w0Id_; }
  int coxeterNumber() const { return h_; }

  ElemId mul(ElemId a, ElemId b) const;  // a then b applied right-to-left: (ab)(v) = a(b(v))
  ElemId inverse(ElemId a) const { return inv_[a]; }
  ElemId lookup(const Perm& p) const;
  int act(ElemId w, int rootIdx) const { return elems_[w][rootIdx]; }
  /// w t_k w^-1 as a reflection index.
  int conjugateReflection(ElemId w, int k) const {
    int im = elems_[w][k];
    return im < npos_ ? im : im - npos_;
  }

  int coxeterLength(ElemId w) const { return coxLen_[w]; }
  int reflectionLength(ElemId w) const;
  int fixDim(ElemId w) const { return n_ - reflectionLength(w); }
  uint32_t supportMask(ElemId w) const { return suppMask_[w]; }
  int supportSize(ElemId w) const { return __builtin_popcount(suppMask_[w]); }

  /// Echelon basis of the moved space Mov(w) = im(w - 1) in simple-root
  /// coordinates (equivalently Fix(w)^perp).
  Echelon movedSpace(ElemId w) const;

  /// Product of a word of reflection indices.
  ElemId productOfReflections(const std::vector<int>& word) const;

 private:
  CoxeterType type_;
  int n_;
  std::vector<std::vector<int>> coxmat_;
  const NumberField* field_ = nullptr;
  Mat gram_;

  std::vector<Vec> roots_;
  int npos_ = 0;
  std::vector<int> simpleRoot_;
  std::vector<int> rootSimple_;
  std::vector<Perm> reflPerm_;

  std::vector<int> color_, plus_, minus_;
  std::vector<int> factorOfSimple_;  // irreducible component index per simple

  std::vector<Perm> elems_;
  std::unordered_map<Perm, ElemId, PermHash> index_;
  std::vector<ElemId> simpleElem_, reflElem_, inv_;
  std::vector<int> coxLen_;
  std::vector<uint32_t> suppMask_;
  mutable std::vector<int> reflLen_;  // lazily filled, -1 = unknown
  ElemId eId_ = 0, cId_ = 0, w0Id_ = 0, cPlusId_ = 0, cMinusId_ = 0;
  int h_ = 0;

  void buildGram();
  void closeRoots();
  void buildReflections();
  void bipartition();
  Vec reflectVector(int posRoot, const Vec& v) const;
};

}  // namespace coxcat
