#pragma once

#include "coxcat/field.hpp"

#include <optional>
#include <vector>

namespace coxcat {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row major

/// Row echelon accumulator over an exact field. Rows are kept reduced; used
/// for rank, span-membership and coordinate extraction.
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  /// Reduces v against the current rows; if a nonzero residue remains it is
  /// inserted and the rank grows. Returns true when the rank grew.
  bool addRow(Vec v);
  bool inSpan(Vec v) const;
  int rank() const { return int(rows_.size()); }
  int ncols() const { return ncols_; }
  const std::vector<Vec>& rows() const { return rows_; }

  /// Coordinate support of the row space: columns on which some vector of the
  /// span is nonzero.
  std::vector<int> support() const;

 private:
  int ncols_;
  std::vector<Vec> rows_;    // reduced, each with a unit pivot
  std::vector<int> pivots_;  // pivot column per row

  void reduceAgainst(Vec& v) const;
};

int matRank(const Mat& m);

/// Solves sum_i x_i * basis[i] = target exactly; nullopt when inconsistent.
/// The basis rows must be linearly independent.
std::optional<Vec> coordinatesIn(const std::vector<Vec>& basis, const Vec& target);

}  // namespace coxcat
