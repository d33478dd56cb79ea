#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "neighborly/common.hpp"
#include "neighborly/sign_matrix.hpp"

namespace neighborly {

enum class TravelKind { top, bottom, plain };

inline const char* travel_kind_name(TravelKind k) {
  switch (k) {
    case TravelKind::top: return "top";
    case TravelKind::bottom: return "bottom";
    case TravelKind::plain: return "plain";
  }
  return "?";
}

/// A staircase path over matrix entries. Segments are listed in traversal
/// order; a top or plain travel moves right and down, a bottom travel moves
/// left and up (so its segments have col_from >= col_to). Breakpoints are the
/// per-segment exit columns j_i.
struct Travel {
  TravelKind kind = TravelKind::plain;
  struct Segment {
    int row;
    int col_from;
    int col_to;
    bool operator==(const Segment&) const = default;
  };
  std::vector<Segment> segments;
  std::vector<int> breakpoints;

  int end_row() const { return segments.back().row; }
  int end_col() const { return segments.back().col_to; }

  bool operator==(const Travel&) const = default;
  bool operator<(const Travel& o) const {
    if (kind != o.kind) return kind < o.kind;
    return breakpoints < o.breakpoints;
  }

  /// Entry cells in traversal order.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (const Segment& s : segments) {
      int step = s.col_from <= s.col_to ? 1 : -1;
      for (int j = s.col_from;; j += step) {
        out.push_back({s.row, j});
        if (j == s.col_to) break;
      }
    }
    return out;
  }
};

namespace detail {

/// Sign accessor with a column-flip bitmask (bit j-1 set negates column j).
struct MaskedSigns {
  const SignMatrix* m;
  std::uint32_t mask;
  int at(int i, int j) const {
    int v = m->at(i, j);
    return (mask >> (j - 1)) & 1u ? -v : v;
  }
};

/// End of the top travel: start at (1,1), move right while the sign matches
/// the segment's entry sign, descend at the first flip. In the last row the
/// travel stops on the entry before the flip; with no flip it runs to column
/// n. Descents happen at the flip column itself, even when that column is n.
template <class Signs>
std::pair<int, int> top_travel_end(const Signs& a, int rows, int cols) {
  int row = 1, entry = 1;
  while (true) {
    int base = a.at(row, entry);
    int flip = 0;
    for (int j = entry + 1; j <= cols; ++j) {
      if (a.at(row, j) != base) {
        flip = j;
        break;
      }
    }
    if (flip == 0) return {row, cols};
    if (row == rows) return {row, flip - 1};
    row += 1;
    entry = flip;
  }
}

/// End of the bottom travel: the 180-degree mirror. Start at (r,n), move left
/// while the sign matches, ascend at the first flip; in row 1 stop on the
/// entry after the flip; with no flip run to column 1.
template <class Signs>
std::pair<int, int> bottom_travel_end(const Signs& a, int rows, int cols) {
  int row = rows, entry = cols;
  while (true) {
    int base = a.at(row, entry);
    int flip = 0;
    for (int j = entry - 1; j >= 1; --j) {
      if (a.at(row, j) != base) {
        flip = j;
        break;
      }
    }
    if (flip == 0) return {row, 1};
    if (row == 1) return {row, flip + 1};
    row -= 1;
    entry = flip;
  }
}

/// Cyclicity verdict under a column-flip mask, asserting the top and bottom
/// criteria agree. Disagreement would falsify the travel proposition.
inline bool cyclic_under_mask(const SignMatrix& m, std::uint32_t mask) {
  MaskedSigns a{&m, mask};
  auto [tr, tc] = top_travel_end(a, m.rows(), m.cols());
  auto [br, bc] = bottom_travel_end(a, m.rows(), m.cols());
  bool top_cyclic = tr == m.rows() && tc < m.cols();
  bool bottom_cyclic = br == 1 && bc > 1;
  if (top_cyclic != bottom_cyclic)
    throw internal_inconsistency("top and bottom travel cyclicity verdicts disagree");
  return top_cyclic;
}

}  // namespace detail

/// The unique greedy top travel of m.
inline Travel top_travel(const SignMatrix& m) {
  Travel t;
  t.kind = TravelKind::top;
  int row = 1, entry = 1;
  while (true) {
    int base = m.at(row, entry);
    int flip = 0;
    for (int j = entry + 1; j <= m.cols(); ++j) {
      if (m.at(row, j) != base) {
        flip = j;
        break;
      }
    }
    if (flip == 0) {
      t.segments.push_back({row, entry, m.cols()});
      break;
    }
    if (row == m.rows()) {
      t.segments.push_back({row, entry, flip - 1});
      break;
    }
    t.segments.push_back({row, entry, flip});
    row += 1;
    entry = flip;
  }
  for (const Travel::Segment& s : t.segments) t.breakpoints.push_back(s.col_to);
  return t;
}

/// The unique greedy bottom travel of m (starts at the bottom-right entry,
/// moves left, ascends at sign flips).
inline Travel bottom_travel(const SignMatrix& m) {
  Travel t;
  t.kind = TravelKind::bottom;
  int row = m.rows(), entry = m.cols();
  while (true) {
    int base = m.at(row, entry);
    int flip = 0;
    for (int j = entry - 1; j >= 1; --j) {
      if (m.at(row, j) != base) {
        flip = j;
        break;
      }
    }
    if (flip == 0) {
      t.segments.push_back({row, entry, 1});
      break;
    }
    if (row == 1) {
      t.segments.push_back({row, entry, flip + 1});
      break;
    }
    t.segments.push_back({row, entry, flip});
    row -= 1;
    entry = flip;
  }
  for (const Travel::Segment& s : t.segments) t.breakpoints.push_back(s.col_to);
  return t;
}

/// Travel cyclicity criterion: the matroid is cyclic iff the top travel ends
/// at (r, s) with s < n, equivalently iff the bottom travel ends at (1, s')
/// with s' > 1. Both clauses are evaluated and must agree.
inline bool is_cyclic_travel(const SignMatrix& m) {
  if (m.cols() < m.rows() + 1)
    throw input_error("is_cyclic_travel: need n >= r+1");
  return detail::cyclic_under_mask(m, 0);
}

/// All plain travels of m: breakpoint sequences (j_1,...,j_s) with s <= r,
/// strictly increasing values in [2, n] except that the final n may repeat
/// once, ending at j_s = n. Enumerated in lexicographic breakpoint order.
///
/// A sequence with an interior repeat is never realizable (a travel cannot
/// flip signs on the single entry where it just descended), so this family is
/// exactly the set of top travels of reorientations of m; see
/// travel_to_reorientation for the inverse map.
inline std::vector<Travel> plain_travels(const SignMatrix& m) {
  int r = m.rows(), n = m.cols();
  std::vector<std::vector<int>> sequences;
  for (int q = 0; q <= r - 1; ++q) {
    // flip columns: q-subsets of [2, n]
    for (const std::vector<int>& sub : subsets_of_size(n - 1, q)) {
      std::vector<int> bp;
      bp.reserve(static_cast<std::size_t>(q) + 1);
      for (int v : sub) bp.push_back(v + 2);
      bp.push_back(n);
      sequences.push_back(std::move(bp));
    }
  }
  std::sort(sequences.begin(), sequences.end());
  std::vector<Travel> out;
  out.reserve(sequences.size());
  for (const std::vector<int>& bp : sequences) {
    Travel t;
    t.kind = TravelKind::plain;
    t.breakpoints = bp;
    int entry = 1;
    for (std::size_t i = 0; i < bp.size(); ++i) {
      t.segments.push_back({static_cast<int>(i) + 1, entry, bp[i]});
      entry = bp[i];
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Classifies an acyclic matrix by where its travels leave the board: the
/// first row in which the top travel touches column n, paired with the first
/// row (in traversal order, so the largest) in which the bottom travel
/// touches column 1. Acyclic realizations of a family board fall into a small
/// number of these exit classes; the full travel paths are finer, one per
/// acyclic reorientation class.
inline std::pair<int, int> acyclic_travel_shape(const SignMatrix& m) {
  int tt_exit = 0, bt_exit = 0;
  for (const Travel::Segment& s : top_travel(m).segments) {
    if (s.col_to == m.cols() || s.col_from == m.cols()) {
      tt_exit = s.row;
      break;
    }
  }
  for (const Travel::Segment& s : bottom_travel(m).segments) {
    if (s.col_to == 1 || s.col_from == 1) {
      bt_exit = s.row;
      break;
    }
  }
  if (tt_exit == 0 || bt_exit == 0)
    throw input_error("acyclic_travel_shape: matrix is cyclic, travels never leave the board");
  return {tt_exit, bt_exit};
}

/// The reorientation class representative (column 1 never flipped) whose top
/// travel follows the given plain travel. Walking the path forces the sign of
/// every column exactly once: within a segment each column must match the
/// entry sign, at a breakpoint it must flip. reorient(m, result) is acyclic
/// and the map is injective over plain_travels(m).
inline ReorientationSet travel_to_reorientation(const SignMatrix& m, const Travel& t) {
  int r = m.rows(), n = m.cols();
  const std::vector<int>& bp = t.breakpoints;
  std::size_t s = bp.size();
  if (s == 0 || s > static_cast<std::size_t>(r) || bp.back() != n)
    throw input_error("travel_to_reorientation: not a plain travel of this matrix");
  for (std::size_t i = 0; i < s; ++i) {
    if (bp[i] < 2 || bp[i] > n)
      throw input_error("travel_to_reorientation: breakpoint out of range");
    if (i > 0) {
      bool strict = bp[i] > bp[i - 1];
      bool terminal_repeat = i + 1 == s && bp[i] == bp[i - 1] && bp[i] == n;
      if (!strict && !terminal_repeat)
        throw input_error("travel_to_reorientation: breakpoints must increase");
    }
  }
  std::vector<int> eps(static_cast<std::size_t>(n) + 1, +1);
  int row = 1, prev = 1;
  int base = m.at(1, 1);
  std::size_t flips = s - 1;
  for (std::size_t i = 0; i < flips; ++i) {
    int c = bp[i];
    for (int j = prev + 1; j < c; ++j) eps[j] = base * m.at(row, j);
    eps[c] = -base * m.at(row, c);
    base = eps[c] * m.at(row + 1, c);
    row += 1;
    prev = c;
  }
  for (int j = prev + 1; j <= n; ++j) eps[j] = base * m.at(row, j);
  std::vector<int> cols;
  for (int j = 1; j <= n; ++j)
    if (eps[j] < 0) cols.push_back(j);
  return ReorientationSet(std::move(cols));
}

}  // namespace neighborly
