#include "coxcat/linalg.hpp"

namespace coxcat {

void Echelon::reduceAgainst(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivots_[r]];
    if (c.isZero()) continue;
    for (int j = 0; j < ncols_; ++j)
      if (!rows_[r][j].isZero()) v[j] -= c * rows_[r][j];
  }
}

bool Echelon::addRow(Vec v) {
  reduceAgainst(v);
  int pivot = -1;
  for (int j = 0; j < ncols_; ++j)
    if (!v[j].isZero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Scalar inv = v[pivot].inverse();
  for (auto& x : v) x *= inv;
  // Back-substitute into existing rows so every pivot column stays clean.
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = rows_[r][pivot];
    if (c.isZero()) continue;
    for (int j = 0; j < ncols_; ++j)
      if (!v[j].isZero()) rows_[r][j] -= c * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool Echelon::inSpan(Vec v) const {
  reduceAgainst(v);
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

std::vector<int> Echelon::support() const {
  std::vector<char> seen(ncols_, 0);
  for (const auto& row : rows_)
    for (int j = 0; j < ncols_; ++j)
      if (!row[j].isZero()) seen[j] = 1;
  std::vector<int> out;
  for (int j = 0; j < ncols_; ++j)
    if (seen[j]) out.push_back(j);
  return out;
}

int matRank(const Mat& m) {
  if (m.empty()) return 0;
  Echelon e(int(m[0].size()));
  for (const auto& row : m) e.addRow(row);
  return e.rank();
}

std::optional<Vec> coordinatesIn(const std::vector<Vec>& basis, const Vec& target) {
  if (basis.empty()) {
    for (const auto& x : target)
      if (!x.isZero()) return std::nullopt;
    return Vec{};
  }
  int n = int(basis[0].size());
  int k = int(basis.size());
  // Augmented elimination on [basis^T | target].
  Mat aug(n, Vec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = target[i];
  }
  std::vector<int> pivotCol;
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (!aug[i][col].isZero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[p], aug[row]);
    Scalar inv = aug[row][col].inverse();
    for (auto& x : aug[row]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      Scalar c = aug[i][col];
      if (c.isZero()) continue;
      for (int j = col; j <= k; ++j) aug[i][j] -= c * aug[row][j];
    }
    pivotCol.push_back(col);
    ++row;
  }
  if (int(pivotCol.size()) != k) throw std::invalid_argument("coordinatesIn: dependent basis");
  for (int i = row; i < n; ++i)
    if (!aug[i][k].isZero()) return std::nullopt;
  Vec coords(k);
  for (int r = 0; r < row; ++r) coords[pivotCol[r]] = aug[r][k];
  return coords;
}

}  // namespace coxcat
