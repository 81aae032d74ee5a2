#pragma once

#include "coxcat/cluster.hpp"

namespace coxcat {

/// The bijection between faces of the generalized cluster complex and chains
/// w_0 subword-below w_1 <= ... <= w_m of noncrossing partitions. Chains are
/// given as NC indices, the bottom first. The orbit of Fix(w_0) matches the
/// face's label.
class FaceChainBijection {
 public:
  FaceChainBijection(const ClusterComplex& cc, const NCLattice& nc);

  std::vector<int> faceToChain(int faceId) const;
  int chainToFace(const std::vector<int>& chain) const;

  /// All valid chains (w_0 subword-below w_1 <= ... <= w_m).
  std::vector<std::vector<int>> allChains() const;

  /// Roundtrips are mutually inverse on all faces and all chains, with the
  /// orbit label preserved.
  bool roundtripCheck() const;

 private:
  const ClusterComplex* cc_;
  const NCLattice* nc_;

  /// The interval bijection: face of the uncolored positive complex with
  /// product u^-1 w <-> element v with u subword-below v full-support-below
  /// w. Faces are sets of positive-root indices.
  std::vector<int> elemToFaceSet(int u, int v, int w) const;
  int faceSetToElem(int u, int w, const std::vector<int>& faceSet) const;
};

}  // namespace coxcat
