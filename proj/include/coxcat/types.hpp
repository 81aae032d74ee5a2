#pragma once

#include "coxcat/numbers.hpp"
#include "coxcat/unipoly.hpp"

#include <string>
#include <vector>

namespace coxcat {

/// One irreducible factor of a finite Coxeter type.
struct IrrFactor {
  char family = 'A';  // A B D E F H I
  int rank = 1;
  int bond = 0;  // I2(bond); 0 otherwise

  bool operator==(const IrrFactor& o) const {
    return family == o.family && rank == o.rank && bond == o.bond;
  }
  bool operator<(const IrrFactor& o) const;

  std::string str() const;
  std::vector<int> exponents() const;
  std::vector<int> degrees() const;
  Int order() const;
  int coxeterNumber() const;
  int numReflections() const;  // rank * h / 2
  /// Largest m_ij in the diagram.
  int maxBond() const;
  /// Canonical Coxeter matrix (rank x rank, m_ii = 1).
  std::vector<std::vector<int>> coxeterMatrix() const;
  /// Root norms (alpha_i, alpha_i) for the canonical realization. Integral
  /// two-length data for the crystallographic families, uniform 2 otherwise.
  std::vector<Rational> norms() const;
};

struct CoxeterType {
  std::vector<IrrFactor> factors;

  static CoxeterType parse(const std::string& text);

  std::string str() const;
  int rank() const;
  Int order() const;
  std::vector<int> exponents() const;  // concatenated, sorted ascending
  bool irreducible() const { return factors.size() == 1; }
  /// Coxeter number; only defined for irreducible types.
  int coxeterNumber() const;
  bool heavy() const;  // H4/E6/E7/E8 factor or total rank > 5

  /// Fuss-Catalan polynomial in m: prod over factors of
  /// 1/|W_f| prod_i (m h_f + e_i + 1).
  UniPoly catalanPoly() const;
  /// Positive variant with (m h_f + e_i - 1).
  UniPoly catalanPlusPoly() const;
  Rational catalan(long m) const { return catalanPoly().eval(m); }
  Rational catalanPlus(long m) const { return catalanPlusPoly().eval(m); }

  bool operator==(const CoxeterType& o) const { return factors == o.factors; }
};

/// Recognizes a finite Coxeter type from a Coxeter matrix (m_ii = 1,
/// m_ij >= 2). Throws on diagrams outside the finite families.
CoxeterType classifyCoxeterMatrix(const std::vector<std::vector<int>>& m);

}  // namespace coxcat
