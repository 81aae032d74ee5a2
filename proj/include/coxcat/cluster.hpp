#pragma once

#include "coxcat/noncross.hpp"

#include <map>

namespace coxcat {

/// One m-colored almost-positive root: a positive root with color in [1, m],
/// or the negative of a simple root with color 1.
struct ColoredRoot {
  int root;   // ambient root index
  int color;  // 1-based
  bool operator==(const ColoredRoot& o) const { return root == o.root && color == o.color; }
};

/// The generalized cluster complex of a subsystem: colored almost-positive
/// roots ordered by the Steinberg reflection ordering, the rotation, the
/// compatibility relation, and the full face list with products and orbit
/// labels. Reducible subsystems are handled componentwise (the complex is
/// the join of the factors).
class ClusterComplex {
 public:
  ClusterComplex(const SubSystem& G, const FlatTable& flats, int m);

  const SubSystem& sub() const { return *G_; }
  int fussParameter() const { return m_; }

  // ---- vertices (ids ascending in the reflection order) ----
  int numVertices() const { return int(verts_.size()); }
  const ColoredRoot& vertex(int v) const { return verts_[v]; }
  int rotate(int v) const { return rotate_[v]; }
  bool compatible(int x, int y) const { return x != y && compat_[x][y]; }
  int vertexIndex(const ColoredRoot& cr) const;

  // ---- faces ----
  int numFaces() const { return int(faces_.size()); }
  const std::vector<int>& faceVerts(int f) const { return faces_[f]; }  // descending
  ElemId faceProduct(int f) const { return faceProd_[f]; }
  ElemId faceUnderline(int f) const { return faceUnder_[f]; }  // c+ (prod f) c-
  int faceTheta(int f) const { return faceTheta_[f]; }         // orbit in flats()
  bool facePositive(int f) const { return facePositive_[f]; }
  int faceIndex(const std::vector<int>& vertsDescending) const;
  const FlatTable& flats() const { return *flats_; }

  std::vector<Int> gammaCensus() const;
  std::vector<Int> gammaPlusCensus() const;
  /// f-vector indexed by face cardinality 0..rank (so index k counts
  /// (k-1)-dimensional faces).
  std::vector<Int> fVector() const;
  std::vector<Int> fPlusVector() const;
  Int facetCount() const;
  Int positiveFacetCount() const;

  /// h-vector from the f-vector by the (z+1)-substitution.
  static std::vector<Rational> hFromF(const std::vector<Int>& f);

  // ---- structural checks ----
  /// Orbit sizes of the rotation: (mh+2)/2 with one negative simple, or
  /// mh+2 with two related by the longest element (componentwise).
  bool rotationOrbitCheck() const;
  /// Face labels are constant along rotation orbits of faces.
  bool rotationInvarianceCheck() const;
  /// Positive faces with a fixed product are counted by the positive
  /// Fuss-Catalan number of the parabolic type.
  bool productFiberCheck() const;
  /// Every maximal face is a facet.
  bool purityCheck() const;

 private:
  const SubSystem* G_;
  const FlatTable* flats_;
  int m_;
  std::vector<ColoredRoot> verts_;
  std::vector<int> rotate_;
  std::vector<int> stepsToNegative_;
  std::vector<boost::dynamic_bitset<>> compat_;
  std::vector<std::vector<int>> faces_;
  std::vector<ElemId> faceProd_, faceUnder_;
  std::vector<int> faceTheta_;
  std::vector<char> facePositive_;
  std::map<std::vector<int>, int> faceIndex_;

  void buildVertices();
  void buildRotation();
  void buildCompatibility();
  void enumerateFaces();
};

/// gamma(W, class, m) = (mh+2)/(2k) sum_s gamma(W_(s), class cap W_(s), m)
/// for every parabolic class of an irreducible group, where k is the
/// dimension of the class's flats.
bool gammaRecursionCheck(const SubSystem& full, const FlatTable& flats, int m);

/// For a reducible group, the census by class equals the componentwise
/// convolution (the complex is the join of the factor complexes).
bool gammaReducibleCheck(const SubSystem& full, const FlatTable& flats, int m);

}  // namespace coxcat
