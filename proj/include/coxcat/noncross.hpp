#pragma once

#include "coxcat/flats.hpp"

namespace coxcat {

/// The noncrossing partition lattice NC(W, c) of a subsystem, with the
/// refined subword order and the full-support order on top of the absolute
/// order, canonical factorizations, the bipartite Kreweras complement, and
/// the chain counts kappa / kappa+ refined by the orbit of the bottom
/// element's fixed space.
class NCLattice {
 public:
  /// c defaults to the subsystem's bipartite Coxeter element; any standard
  /// Coxeter element (product of the simples in some order) is accepted.
  NCLattice(const SubSystem& G, const FlatTable& flats);
  NCLattice(const SubSystem& G, const FlatTable& flats, ElemId c);

  const SubSystem& sub() const { return *G_; }
  const FlatTable& flats() const { return *flats_; }
  ElemId coxeterElem() const { return c_; }

  int size() const { return int(elem_.size()); }
  ElemId elem(int i) const { return elem_[i]; }
  int indexOf(ElemId w) const;
  bool contains(ElemId w) const;
  int length(int i) const { return len_[i]; }
  int theta(int i) const { return theta_[i]; }
  /// Support size of elem(i) inside the subsystem.
  int supportSize(int i) const;
  bool fullSupport(int i) const;

  /// Canonical factorization: reflections forming the simple system of the
  /// parabolic W_Fix(w), in an order whose product is w.
  const std::vector<int>& canonicalFactorization(int i) const { return canon_[i]; }

  bool leq(int u, int v) const { return leqUp_[u][v]; }        // absolute order
  bool subword(int u, int v) const { return subOf_[v][u]; }    // u subword-below v
  bool fullBelow(int u, int v) const { return llOf_[v][u]; }   // u full-support-below v

  /// The unique v with u full-support-below v and v subword-below w;
  /// requires u <= w.
  int uniqueMiddle(int u, int w) const;

  /// Bipartite Kreweras complement w -> c+ w c-.
  int kreweras(int i) const;

  // ---- refined chain counts over the orbit set of flats() ----
  /// kappa(X, m): multichains w_1 <= ... <= w_m with Fix(w_1) in orbit X.
  std::vector<Int> kappaCensus(int m) const;
  /// Top element must have full support.
  std::vector<Int> kappaPlusCensus(int m) const;
  /// Census restricted to a set of admissible bottom elements.
  Int chainCount(int m, const std::vector<char>& bottomAdmissible, bool fullSupportTop) const;

  /// kappa(X, -) as a polynomial in m, via Fuss-Catalan numbers of the
  /// parabolic type of w^-1 c over the elements w of the class.
  UniPoly kappaPoly(int orbit) const;
  /// Same but with an arbitrary admissible set of bottom elements.
  UniPoly kappaPolyFor(const std::vector<char>& bottomAdmissible) const;

  /// Narayana census: multichains with given bottom length.
  std::vector<Int> narayanaCensus(int m) const;            // index k = length of bottom
  std::vector<Int> narayanaPlusCensus(int m) const;

  // ---- structural checks ----
  bool booleanIntervalCheck() const;   // #subwords = 2^len, #above = 2^(supp-len)
  bool uniqueMiddleCheck() const;      // existence and uniqueness on all pairs
  bool krewerasCheck() const;          // involutive rank-reversing anti-automorphism

 private:
  const SubSystem* G_;
  const FlatTable* flats_;
  ElemId c_;
  bool bipartite_;
  std::vector<ElemId> elem_;
  std::vector<int32_t> idxOf_;  // ambient id -> nc index
  std::vector<int> len_, theta_;
  std::vector<std::vector<int>> canon_;
  std::vector<boost::dynamic_bitset<>> leqUp_, subOf_, llOf_;

  void build();
  std::vector<int> factorize(ElemId w, const std::vector<int>& simples) const;
  bool fullSupportIn(ElemId v, int flatOfTop) const;
};

/// The combinatorial matrices over the orbit set: counts of elements below a
/// class representative in the three orders, the sign diagonal, and the unit
/// vector supported on the orbit of Fix(c).
struct ThetaMatrices {
  std::vector<std::vector<Int>> Q, R, N;
  std::vector<Int> D;  // diagonal entries (-1)^(rank - dim X)
  std::vector<Int> U;  // indicator of the top orbit

  static ThetaMatrices build(const NCLattice& nc);

  static std::vector<std::vector<Int>> mul(const std::vector<std::vector<Int>>& a,
                                           const std::vector<std::vector<Int>>& b);
  static std::vector<Int> apply(const std::vector<std::vector<Int>>& a,
                                const std::vector<Int>& v);
  std::vector<std::vector<Int>> scaledByD(const std::vector<std::vector<Int>>& a,
                                          bool left) const;
  /// Chain-count coefficient vectors park = Q^m U and park' = Q^(m-1) R U.
  std::vector<Int> parkVector(int m) const;
  std::vector<Int> parkPrimeVector(int m) const;
};

}  // namespace coxcat
