#pragma once

#include "coxcat/subsystem.hpp"
#include "coxcat/unipoly.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <string>

namespace coxcat {

/// The intersection lattice of a reflection (sub)group: flats Fix(w)
/// represented by their reflection sets, the orbit decomposition under the
/// group, Mobius data, characteristic polynomials and Orlik-Solomon
/// exponents, and the Coxeter-number multiset identities of restricted
/// arrangements.
///
/// Flats are ordered by reverse inclusion of subspaces, i.e. X <= Y iff
/// reflSet(X) is contained in reflSet(Y). V (no reflections) is minimal, the
/// flat of a Coxeter element maximal. Dimensions are relative to the
/// subsystem's rank. Orbits follow a fixed deterministic order: dimension
/// ascending, then lexicographic minimal reflection set.
class FlatTable {
 public:
  explicit FlatTable(const SubSystem& G);

  const SubSystem& sub() const { return *G_; }
  int numFlats() const { return int(reflSet_.size()); }
  int numOrbits() const { return int(orbitRep_.size()); }

  const std::vector<int>& reflSet(int flat) const { return reflSet_[flat]; }
  int flatDim(int flat) const { return dim_[flat]; }
  /// X <= Y: the subspace of X contains the subspace of Y.
  bool leq(int x, int y) const { return above_[x][y]; }
  int flatOfLocal(int localElem) const { return elemFlat_[localElem]; }
  int flatOf(ElemId w) const;
  int orbitOfFlat(int flat) const { return orbitOf_[flat]; }
  int orbitOf(ElemId w) const { return orbitOf_[flatOf(w)]; }
  /// Conjugate flat w . X (as a flat index).
  int conjugateFlat(ElemId w, int flat) const;

  /// The parabolic W_X as local element indices; X given as a flat index.
  std::vector<int> parabolicMembers(int flat) const;
  bool memberOfParabolic(ElemId w, int flat) const;
  /// Simple system of the parabolic: positive-root indices.
  const std::vector<int>& parabolicSimples(int flat) const { return parabSimples_[flat]; }

  Int mobius(int x, int y) const;

  // ---- per-orbit data (index by orbit id) ----
  int orbitRep(int orbit) const { return orbitRep_[orbit]; }
  int orbitSize(int orbit) const { return orbitSize_[orbit]; }
  int orbitDim(int orbit) const { return dim_[orbitRep_[orbit]]; }
  const CoxeterType& orbitType(int orbit) const { return orbitType_[orbit]; }
  const std::string& label(int orbit) const { return label_[orbit]; }
  Int parabolicOrder(int orbit) const { return parabolicOrder_[orbit]; }
  Int normalizerIndex(int orbit) const { return normalizerIndex_[orbit]; }
  int nu(int orbit) const { return nu_[orbit]; }
  const UniPoly& charPoly(int orbit) const { return charPoly_[orbit]; }  // in t
  const std::vector<Int>& osExponents(int orbit) const { return osExponents_[orbit]; }
  /// Number of group elements whose fixed space lies in the orbit.
  Int classSize(int orbit) const { return classSize_[orbit]; }
  /// The orbit whose parabolic is the whole subsystem (the flat of c).
  int topOrbit() const { return topOrbit_; }
  /// The orbit of the full space V (parabolic = trivial group).
  int bottomOrbit() const { return bottomOrbit_; }

  /// Exponents of the group: OS exponents of the full space V.
  std::vector<Int> exponents() const { return osExponents_[bottomOrbit_]; }

  // ---- closed-form polynomials in m (irreducible subsystems) ----
  UniPoly kappaClosedPoly(int orbit) const;       // p_X(mh+1) / [N:W_X]
  UniPoly kappaPlusClosedPoly(int orbit) const;   // p_X(mh-1) / [N:W_X]
  UniPoly gammaClosedPoly(int orbit) const;       // (-1)^dim p_X(-mh-1) / [N:W_X]
  UniPoly gammaPlusClosedPoly(int orbit) const;   // (-1)^dim p_X(-mh+1) / [N:W_X]

  // ---- structural checks ----
  /// sum_w t^{dim Fix(w)} == prod (t + e_i).
  bool shephardToddCheck() const;
  /// Eq. relating normalizer index, nu and OS exponents, per orbit.
  bool factorNuCheck() const;
  /// (-1)^dim p_X(-1) == nu(X) [N(W_X):W_X] per orbit.
  bool regionCountCheck() const;

  /// Multiset of Coxeter numbers h_i(X,Z) for subspace-nested flats X in Z
  /// (i.e. reflSet(Z) contained in reflSet(X)).
  std::vector<int> coxeterNumberMultiset(int x, int z) const;
  /// prod (h_i(X,Z) + t) == sum_{X in Y in Z} prod h_i(Y,Z) t^{dimY - dimX}.
  bool laplacianRecursionCheck(int x, int z) const;
  /// (mh+1)^{dim Z} == sum_{X in Z} r(A^X) prod (m h_i(X,Z) - 1), in m.
  bool regionsIdentityCheck(int z) const;

  /// Level of each exponent: min k such that e is an OS exponent of every
  /// orbit of dimension >= k. Returned in the order of exponents().
  std::vector<int> exponentLevels() const;

 private:
  const SubSystem* G_;
  int rank_;
  std::vector<std::vector<int>> reflSet_;
  std::map<std::vector<int>, int> flatIndex_;
  std::vector<int> dim_;
  std::vector<int> elemFlat_;
  std::vector<std::vector<int>> parabSimples_;
  std::vector<boost::dynamic_bitset<>> above_;  // above_[x][y] = (x <= y)

  std::vector<int> orbitOf_, orbitRep_, orbitSize_;
  std::vector<CoxeterType> orbitType_;
  std::vector<std::string> label_;
  std::vector<Int> parabolicOrder_, normalizerIndex_, classSize_;
  std::vector<int> nu_;
  std::vector<UniPoly> charPoly_;
  std::vector<std::vector<Int>> osExponents_;
  int topOrbit_ = -1, bottomOrbit_ = -1;

  mutable std::map<std::pair<int, int>, Int> mobiusMemo_;

  void computeParabolicSimples();
  void computeOrbits();
  void computeOrbitData();
  UniPoly charPolyAt(int flat) const;
  std::vector<std::pair<std::vector<int>, int>> componentsOf(int flat) const;
};

}  // namespace coxcat
