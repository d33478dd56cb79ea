#pragma once

#include <optional>
#include <vector>

#include "neighborly/common.hpp"

namespace neighborly {

/// Dense exact-rational matrix, row major, 0-based. Small and simple: desk
/// scale is a handful of rows and columns.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMat transposed() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

inline Rat determinant(RatMat m) {
  if (m.rows() != m.cols()) throw input_error("determinant: matrix not square");
  int n = m.rows();
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m.at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int row = col + 1; row < n; ++row) {
      if (m.at(row, col) == 0) continue;
      Rat f = m.at(row, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
    }
  }
  return det;
}

/// In-place reduced row echelon form, pivoting on the first nonzero entry of
/// the leftmost unfinished column (fully deterministic). Returns the pivot
/// columns in order.
inline std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) swap(m.at(p, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

/// Canonical basis of { x : A x = 0 }: one vector per free column of the
/// RREF, with a 1 in its free position and zeros in the other free positions.
/// Basis vectors are ordered by free column index.
inline std::vector<std::vector<Rat>> kernel_basis(RatMat a) {
  int n = a.cols();
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b when A has full column rank; nullopt when inconsistent.
/// Throws if the column rank is deficient (no unique solution to return).
inline std::optional<std::vector<Rat>> solve_unique(const RatMat& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw input_error("solve_unique: size mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == a.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  if (static_cast<int>(pivots.size()) != a.cols())
    throw input_error("solve_unique: matrix is column rank deficient");
  std::vector<Rat> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

}  // namespace neighborly
