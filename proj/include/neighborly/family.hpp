#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "neighborly/chessboard.hpp"
#include "neighborly/common.hpp"
#include "neighborly/sign_matrix.hpp"
#include "neighborly/travel.hpp"

namespace neighborly {

/// Parameters of the diagonal chessboard families. For k = 2 the board is a
/// diagonal of double black blocks on an r x (2(r-1)+1) matrix; for k >= 3
/// single blocks appear in rows congruent to l modulo s, thinning the
/// diagonal by k-2 cells.
struct FamilyParams {
  int rank = 0;  // r
  int k = 2;
  int l = 0;  // phase, k >= 3 only

  int cols() const {  // n
    return k == 2 ? 2 * (rank - 1) + 1 : 2 * (rank - 1) - (k - 2) + 1;
  }
  int period() const {  // s
    return (rank - 2 + (k - 2)) / (k - 2);  // ceil((r-1)/(k-2))
  }

  /// Rows of the board (1..rank-1) that carry a single black block.
  bool single_row(int i) const {
    if (k == 2) return false;
    return ((i - l) % period() + period()) % period() == 0;
  }

  void validate() const {
    if (k < 2) throw input_error("FamilyParams: k must be >= 2");
    if (rank < 2) throw input_error("FamilyParams: rank must be >= 2");
    if (k == 2) {
      if (l != 0) throw input_error("FamilyParams: l is only meaningful for k >= 3");
      return;
    }
    if (rank < 3) throw input_error("FamilyParams: k >= 3 needs rank >= 3");
    int s = period();
    if (l < 1 || l > s) throw input_error("FamilyParams: need 1 <= l <= s");
    int singles = 0;
    for (int i = 1; i <= rank - 1; ++i) singles += single_row(i) ? 1 : 0;
    if (singles != k - 2)
      throw input_error(
          "FamilyParams: this (rank, k, l) cannot place exactly k-2 single blocks");
    if (cols() < rank + 1)
      throw input_error("FamilyParams: board too thin, need n >= r+1");
  }
};

/// A family chessboard: a corner-connected staircase of n-1 black cells from
/// (1,1) to (r-1, n-1), with double blocks everywhere except the k-2 single
/// rows.
struct FamilyBoard {
  FamilyParams params;
  Chessboard board;
};

/// Builds the normalized staircase board for the given parameters: row i
/// contributes one black cell when single_row(i) and two otherwise, each row
/// starting in the column right after the previous row's last black cell.
inline FamilyBoard build_board(const FamilyParams& p) {
  p.validate();
  int rows = p.rank - 1, cols = p.cols() - 1;
  std::set<std::pair<int, int>> black;
  int col = 1;
  for (int i = 1; i <= rows; ++i) {
    int len = p.single_row(i) ? 1 : 2;
    for (int t = 0; t < len; ++t) black.insert({i, col++});
  }
  if (col != cols + 1)
    throw internal_inconsistency("build_board: staircase does not end at (r-1, n-1)");
  return FamilyBoard{p, Chessboard::from_black_cells(rows, cols, black)};
}

/// The board obtained by evaluating the raw index formulas for the k >= 3
/// family instead of the normalized staircase. Cells falling outside the
/// board are dropped and reported; the raw formulas also leave a column gap
/// after each single block, so this board is generally not a staircase. Kept
/// for comparison under a strict flag.
struct RawFamilyBoard {
  Chessboard board;
  std::vector<std::pair<int, int>> dropped;  // formula cells outside the board
};

inline RawFamilyBoard raw_family_board(const FamilyParams& p) {
  p.validate();
  if (p.k == 2) return RawFamilyBoard{build_board(p).board, {}};
  int rows = p.rank - 1, cols = p.cols() - 1, s = p.period();
  std::set<std::pair<int, int>> black;
  std::vector<std::pair<int, int>> dropped;
  for (int i = 1; i <= rows; ++i) {
    int ceil_term = (i - 1 + p.l + s - 1) / s;
    int j = 2 * i - ceil_term;
    auto put = [&](int jj) {
      if (jj >= 1 && jj <= cols) black.insert({i, jj});
      else dropped.push_back({i, jj});
    };
    put(j);
    if ((i + s - p.l) % s != 0) put(j + 1);
  }
  return RawFamilyBoard{Chessboard::from_black_cells(rows, cols, black), dropped};
}

/// Number of sign matrices realizing a fixed (r-1) x (n-1) chessboard: the
/// first row and first column are free, everything else is forced.
inline std::uint64_t realization_count(int rank, int cols) {
  return std::uint64_t{1} << (rank + cols - 1);
}

/// The index-th realization of the board (index < 2^(r+n-1)): the low n bits
/// choose the first row, the next r-1 bits choose the rest of column 1, and
/// a(i+1,j+1) = color(i,j) * a(i,j) * a(i,j+1) * a(i+1,j) completes the grid.
inline SignMatrix board_realization(const Chessboard& b, std::uint64_t index) {
  int rank = b.rows() + 1, n = b.cols() + 1;
  std::vector<std::int8_t> e(static_cast<std::size_t>(rank) * n);
  auto ref = [&](int i, int j) -> std::int8_t& {
    return e[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  };
  for (int j = 1; j <= n; ++j) ref(1, j) = (index >> (j - 1)) & 1 ? -1 : +1;
  for (int i = 2; i <= rank; ++i) ref(i, 1) = (index >> (n + i - 2)) & 1 ? -1 : +1;
  for (int i = 1; i < rank; ++i)
    for (int j = 1; j < n; ++j) {
      int color = b.black(i, j) ? -1 : +1;
      ref(i + 1, j + 1) = static_cast<std::int8_t>(color * ref(i, j) * ref(i, j + 1) * ref(i + 1, j));
    }
  return SignMatrix(rank, n, std::move(e));
}

/// Streams every realization of the board through `fn(index, matrix)`.
template <class Fn>
void enumerate_realizations(const FamilyBoard& fb, Fn&& fn) {
  std::uint64_t total = realization_count(fb.params.rank, fb.params.cols());
  for (std::uint64_t i = 0; i < total; ++i) fn(i, board_realization(fb.board, i));
}

/// Smallest reorientation set (by cardinality, then lexicographically) of
/// size <= budget making the matroid cyclic; the empty set when the input is
/// already cyclic; nullopt when nothing within budget works.
inline std::optional<ReorientationSet> min_cyclic_reorientation(const SignMatrix& m,
                                                                int budget) {
  if (m.cols() > 32) throw input_error("min_cyclic_reorientation: n > 32 unsupported");
  for (int card = 0; card <= budget; ++card) {
    for (const std::vector<int>& sub : subsets_of_size(m.cols(), card)) {
      std::uint32_t mask = 0;
      for (int j : sub) mask |= std::uint32_t{1} << j;  // 0-based entry j is column j+1, bit j
      if (detail::cyclic_under_mask(m, mask)) {
        std::vector<int> cols(sub.size());
        for (std::size_t t = 0; t < sub.size(); ++t) cols[t] = sub[t] + 1;
        return ReorientationSet(std::move(cols));
      }
    }
  }
  return std::nullopt;
}

}  // namespace neighborly
