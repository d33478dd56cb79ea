#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "neighborly/common.hpp"
#include "neighborly/sign_matrix.hpp"

namespace neighborly {

/// The (r-1) x (n-1) black/white board of 2x2 entry-product parities of a
/// sign matrix. Cell (i,j) sits with its upper-left corner on entry (i,j).
/// Boards are invariant under column reorientation of the source matrix, and
/// under negating any full row.
class Chessboard {
 public:
  Chessboard(int rows, int cols, std::vector<bool> black)
      : rows_(rows), cols_(cols), black_(std::move(black)) {
    if (rows_ < 1 || cols_ < 1) throw input_error("Chessboard: need at least one cell");
    if (static_cast<int>(black_.size()) != rows_ * cols_)
      throw input_error("Chessboard: cell count does not match shape");
  }

  static Chessboard from_black_cells(int rows, int cols,
                                     const std::set<std::pair<int, int>>& black_cells) {
    std::vector<bool> b(static_cast<std::size_t>(rows) * cols, false);
    for (auto [i, j] : black_cells) {
      if (i < 1 || i > rows || j < 1 || j > cols)
        throw input_error("Chessboard: black cell out of range");
      b[static_cast<std::size_t>(i - 1) * cols + (j - 1)] = true;
    }
    return Chessboard(rows, cols, std::move(b));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool black(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw input_error("Chessboard::black out of range");
    return black_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
  }

  int black_count() const {
    int c = 0;
    for (bool b : black_) c += b ? 1 : 0;
    return c;
  }

  std::set<std::pair<int, int>> black_cells() const {
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j)
        if (black(i, j)) out.insert({i, j});
    return out;
  }

  bool operator==(const Chessboard& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && black_ == other.black_;
  }
  bool operator!=(const Chessboard& other) const { return !(*this == other); }

  /// Text form: rows over {B,.}.
  std::string to_text() const {
    std::string out;
    for (int i = 1; i <= rows_; ++i) {
      for (int j = 1; j <= cols_; ++j) out.push_back(black(i, j) ? 'B' : '.');
      if (i < rows_) out.push_back('\n');
    }
    return out;
  }

 private:
  int rows_;
  int cols_;
  std::vector<bool> black_;
};

/// Cell (i,j) is black iff a(i,j)*a(i,j+1)*a(i+1,j)*a(i+1,j+1) = -1.
inline Chessboard chessboard_of(const SignMatrix& m) {
  if (m.rows() < 2 || m.cols() < 2)
    throw input_error("chessboard_of: need r >= 2 and n >= 2");
  int rows = m.rows() - 1, cols = m.cols() - 1;
  std::vector<bool> black(static_cast<std::size_t>(rows) * cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      black[static_cast<std::size_t>(i - 1) * cols + (j - 1)] =
          m.at(i, j) * m.at(i, j + 1) * m.at(i + 1, j) * m.at(i + 1, j + 1) == -1;
  return Chessboard(rows, cols, std::move(black));
}

/// Matrix-entry positions touching the black diagonal from above (UD) and
/// from below (LD).
struct DiagonalSets {
  std::set<std::pair<int, int>> upper;  // UD: entries (i,j) with cell (i,j) or (i,j-1) black
  std::set<std::pair<int, int>> lower;  // LD: entries (i,j) with cell (i-1,j-1) or (i-1,j) black
};

namespace detail {

/// True when the black cells form one monotone corner-connected staircase
/// covering columns 1..cols with every row occupied.
inline bool is_staircase_diagonal(const Chessboard& b) {
  int expected_start = 1;
  for (int i = 1; i <= b.rows(); ++i) {
    int first = 0, last = 0;
    for (int j = 1; j <= b.cols(); ++j) {
      if (!b.black(i, j)) continue;
      if (first == 0) first = j;
      else if (j != last + 1) return false;  // row's run must be contiguous
      last = j;
    }
    if (first == 0) return false;  // every row carries part of the diagonal
    if (first != expected_start) return false;
    expected_start = last + 1;
  }
  return expected_start == b.cols() + 1;  // staircase must end at (rows, cols)
}

}  // namespace detail

/// Expands the UD/LD definitions over a staircase-diagonal board. The entry
/// grid is (rows+1) x (cols+1) where the board is rows x cols.
inline DiagonalSets diagonal_sets(const Chessboard& b) {
  if (!detail::is_staircase_diagonal(b))
    throw contract_violation("diagonal_sets: black cells do not form a staircase diagonal");
  DiagonalSets out;
  auto cell_black = [&b](int i, int j) {
    return i >= 1 && i <= b.rows() && j >= 1 && j <= b.cols() && b.black(i, j);
  };
  int entry_rows = b.rows() + 1, entry_cols = b.cols() + 1;
  for (int i = 1; i <= entry_rows; ++i) {
    for (int j = 1; j <= entry_cols; ++j) {
      if (cell_black(i, j) || cell_black(i, j - 1)) out.upper.insert({i, j});
      if (cell_black(i - 1, j - 1) || cell_black(i - 1, j)) out.lower.insert({i, j});
    }
  }
  return out;
}

}  // namespace neighborly
