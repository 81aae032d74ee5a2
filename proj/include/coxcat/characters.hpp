#pragma once

#include "coxcat/noncross.hpp"

namespace coxcat {

/// Character data of the parabolic Burnside ring of a subsystem: the
/// parabolic table of marks (values of the induced-trivial characters
/// Phi_X on the parabolic classes), class sizes, and evaluation utilities.
/// Class functions are stored as value vectors over the orbit set, which is
/// faithful for everything in the parabolic Burnside ring.
class CharacterData {
 public:
  CharacterData(const SubSystem& G, const FlatTable& flats);

  const SubSystem& sub() const { return *G_; }
  const FlatTable& flats() const { return *flats_; }
  int numClasses() const { return flats_->numOrbits(); }

  /// marks()[X][Y]: value of Phi_X on the class of flats in orbit Y.
  const std::vector<std::vector<Int>>& marks() const { return marks_; }
  /// A chosen representative element of each class.
  ElemId classRep(int orbit) const { return classRep_[orbit]; }

  /// Values of sum_X coeffs[X] Phi_X on all classes.
  std::vector<Rational> valuesOf(const std::vector<Rational>& coeffs) const;
  std::vector<Rational> phiValues(int orbit) const;
  std::vector<Rational> signValues() const;  // (-1)^(reflection length)
  std::vector<Rational> psiValues(const Rational& t) const;
  std::vector<UniPoly> psiSymbolic() const;  // t^(dim Y) as polynomials in t

  /// Expansion of a symbolic class function over the Phi basis, by solving
  /// against the (triangular) table of marks.
  std::vector<UniPoly> expandOverMarks(const std::vector<UniPoly>& values) const;

  /// Pointwise product of value vectors (tensor product of characters).
  static std::vector<Rational> tensor(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b);

  /// Induction of a class function on a standard-parabolic subsystem, given
  /// by its values over the subsystem's classes, to this group.
  std::vector<Rational> induceValues(const CharacterData& sub,
                                     const std::vector<Rational>& subValues) const;

  /// (1/|W|) sum_w f(w) via class sizes.
  Rational trivialMultiplicity(const std::vector<Rational>& values) const;

  // ---- checks ----
  /// Marks table is triangular with nonzero diagonal in the fixed order.
  bool marksTriangularCheck() const;
  /// Coefficients of Psi_t over the Phi basis equal p_X(t)/[N:W_X].
  bool psiExpansionCheck() const;
  /// Solomon: eps (x) Phi_J = sum_{I subset J} (-1)^|I| Phi_I for every J.
  bool solomonCheck() const;
  /// eps (x) ind(chi) = ind(eps_sub (x) chi) on a subsystem.
  bool signInductionCheck(const CharacterData& sub) const;

 private:
  const SubSystem* G_;
  const FlatTable* flats_;
  std::vector<std::vector<Int>> marks_;
  std::vector<ElemId> classRep_;
  std::vector<std::vector<ElemId>> transversal_;  // coset reps of W_X per orbit
  /// Phi_X value on a single element.
  Int phiValueAt(int orbitX, ElemId w) const;
};

}  // namespace coxcat
