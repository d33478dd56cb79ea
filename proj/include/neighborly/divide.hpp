#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "neighborly/common.hpp"
#include "neighborly/gale.hpp"
#include "neighborly/geometry.hpp"
#include "neighborly/lp.hpp"

namespace neighborly {

/// A bipartition {A, B} of the labels 1..n, both sides nonempty, stored
/// sorted. Label 1 always sits in A (the canonical representative of the
/// unordered pair).
struct Partition {
  std::vector<int> a;
  std::vector<int> b;

  void validate(int n) const {
    if (a.empty() || b.empty()) throw input_error("Partition: both sides must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const std::vector<int>* side : {&a, &b}) {
      for (std::size_t i = 0; i < side->size(); ++i) {
        int v = (*side)[i];
        if (v < 1 || v > n) throw input_error("Partition: label out of range");
        if (i > 0 && (*side)[i - 1] >= v) throw input_error("Partition: labels must be sorted");
        if (seen[v]) throw input_error("Partition: duplicate label");
        seen[v] = true;
      }
    }
    for (int v = 1; v <= n; ++v)
      if (!seen[v]) throw input_error("Partition: labels must cover 1..n");
  }

  bool operator==(const Partition&) const = default;
};

/// Affine hyperplane <c, x> + delta = 0 with an orientation: the A side of a
/// separation is the strictly positive side.
struct Hyperplane {
  std::vector<Rat> c;
  Rat delta;

  Rat eval(const std::vector<Rat>& x) const {
    Rat s = delta;
    for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * x[j];
    return s;
  }
};

namespace detail {

inline std::vector<int> surviving(const std::vector<int>& side, const std::vector<int>& removed) {
  std::vector<int> out;
  for (int v : side)
    if (!std::binary_search(removed.begin(), removed.end(), v)) out.push_back(v);
  return out;
}

}  // namespace detail

/// Exact test conv(A \ R) n conv(B \ R) != empty: feasibility of a common
/// convex combination, decided by rational pivoting. An emptied side makes
/// the intersection empty.
inline bool hulls_intersect(const PointConfig& x, const Partition& part,
                            const std::vector<int>& removed) {
  x.validate();
  part.validate(x.size());
  std::vector<int> rem = removed;
  std::sort(rem.begin(), rem.end());
  for (int v : rem)
    if (v < 1 || v > x.size()) throw input_error("hulls_intersect: removed label out of range");
  std::vector<int> sa = detail::surviving(part.a, rem);
  std::vector<int> sb = detail::surviving(part.b, rem);
  if (sa.empty() || sb.empty()) return false;
  int d = x.dim();
  int na = static_cast<int>(sa.size()), nb = static_cast<int>(sb.size());
  RatMat m(d + 2, na + nb);
  std::vector<Rat> rhs(static_cast<std::size_t>(d) + 2);
  for (int i = 0; i < na; ++i) {
    const auto& p = x.point(sa[i]);
    for (int j = 0; j < d; ++j) m.at(j, i) = p[j];
    m.at(d, i) = 1;
  }
  for (int i = 0; i < nb; ++i) {
    const auto& p = x.point(sb[i]);
    for (int j = 0; j < d; ++j) m.at(j, na + i) = -p[j];
    m.at(d + 1, na + i) = 1;
  }
  rhs[d] = 1;
  rhs[d + 1] = 1;
  return lp_feasible_eq(m, rhs);
}

/// A hyperplane strictly separating conv(A \ R) from conv(B \ R), found by
/// maximizing the worst signed margin; nullopt when the hulls intersect (no
/// strict separation of compact polytopes exists then). An emptied side is
/// separated vacuously.
inline std::optional<Hyperplane> separating_hyperplane(const PointConfig& x, const Partition& part,
                                                       const std::vector<int>& removed) {
  x.validate();
  part.validate(x.size());
  std::vector<int> rem = removed;
  std::sort(rem.begin(), rem.end());
  std::vector<int> sa = detail::surviving(part.a, rem);
  std::vector<int> sb = detail::surviving(part.b, rem);
  int d = x.dim();
  int rows = static_cast<int>(sa.size() + sb.size());
  // variables: c+ (d), c- (d), delta+, delta-, t, one slack per point row, cap slack
  int vc = 0, vcn = d, vdp = 2 * d, vdm = 2 * d + 1, vt = 2 * d + 2, vs = 2 * d + 3;
  int cols = vs + rows + 1;
  RatMat m(rows + 1, cols);
  std::vector<Rat> rhs(static_cast<std::size_t>(rows) + 1);
  int r = 0;
  for (int side = 0; side < 2; ++side) {
    const std::vector<int>& labels = side == 0 ? sa : sb;
    int sign = side == 0 ? 1 : -1;
    for (int label : labels) {
      const auto& p = x.point(label);
      for (int j = 0; j < d; ++j) {
        m.at(r, vc + j) = sign * p[j];
        m.at(r, vcn + j) = -sign * p[j];
      }
      m.at(r, vdp) = sign;
      m.at(r, vdm) = -sign;
      m.at(r, vt) = -1;
      m.at(r, vs + r) = -1;
      ++r;
    }
  }
  m.at(rows, vt) = 1;
  m.at(rows, vs + rows) = 1;
  rhs[rows] = 1;
  std::vector<Rat> cost(static_cast<std::size_t>(cols));
  cost[vt] = 1;
  LpSolution sol = lp_max_eq(m, rhs, cost);
  if (sol.status != LpSolution::Status::optimal || sol.value <= 0) return std::nullopt;
  Hyperplane h;
  h.c.resize(d);
  for (int j = 0; j < d; ++j) h.c[j] = sol.x[vc + j] - sol.x[vcn + j];
  h.delta = sol.x[vdp] - sol.x[vdm];
  return h;
}

/// One refuted partition: the removal that breaks it and the exact witness
/// hyperplane (A side strictly positive, B side strictly negative).
struct PartitionRefutation {
  Partition partition;
  std::vector<int> removed;
  Hyperplane plane;
};

struct DivisibilityResult {
  int k = 0;
  bool divisible = false;
  std::optional<Partition> witness;             // set when divisible
  std::vector<PartitionRefutation> refutations;  // one per partition otherwise
};

/// All bipartitions with label 1 on the A side, ordered lexicographically by
/// the A label list.
inline std::vector<Partition> all_bipartitions(int n) {
  std::vector<Partition> parts;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    Partition p;
    p.a.push_back(1);
    for (int v = 2; v <= n; ++v) {
      if ((mask >> (v - 2)) & 1) p.b.push_back(v);
      else p.a.push_back(v);
    }
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end(), [](const Partition& l, const Partition& r) { return l.a < r.a; });
  return parts;
}

/// Searches the 2^(n-1) - 1 bipartitions for one whose hulls still intersect
/// after every k-point removal. Returns the lexicographically smallest
/// witness, or a refutation (failing removal plus separating hyperplane) for
/// every partition when the set is not k-divisible.
inline DivisibilityResult is_k_divisible(const PointConfig& x, int k) {
  x.validate();
  if (x.size() < 2) throw input_error("is_k_divisible: need at least two points");
  if (k < 0) throw input_error("is_k_divisible: k must be >= 0");
  if (!is_general_position(x))
    throw input_error("is_k_divisible: configuration not in general position");
  DivisibilityResult result;
  result.k = k;
  std::vector<std::vector<int>> removals;
  for (const std::vector<int>& sub : subsets_of_size(x.size(), k)) {
    std::vector<int> labels(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) labels[i] = sub[i] + 1;
    removals.push_back(std::move(labels));
  }
  std::vector<std::pair<Partition, std::vector<int>>> failures;
  for (const Partition& part : all_bipartitions(x.size())) {
    bool holds = true;
    for (const std::vector<int>& rem : removals) {
      if (!hulls_intersect(x, part, rem)) {
        failures.push_back({part, rem});
        holds = false;
        break;
      }
    }
    if (holds) {
      result.divisible = true;
      result.witness = part;
      return result;
    }
  }
  // hyperplanes are extracted only once the verdict is final
  for (const auto& [part, rem] : failures) {
    auto plane = separating_hyperplane(x, part, rem);
    if (!plane)
      throw internal_inconsistency(
          "is_k_divisible: infeasible intersection without strict separation");
    result.refutations.push_back({part, rem, *plane});
  }
  result.divisible = false;
  return result;
}

/// Partition of 1..n into exactly s nonempty blocks, stored as sorted blocks
/// ordered by smallest element (restricted growth form).
struct SPartition {
  std::vector<std::vector<int>> blocks;
};

struct SDivisibilityResult {
  int s = 0;
  int k = 0;
  bool divisible = false;
  bool complete = true;  // false when the partition cap cut the search
  std::uint64_t checked = 0;
  std::uint64_t total = 0;
  std::optional<SPartition> witness;
};

/// Exact feasibility of a point common to conv(B_t \ R) for all blocks.
inline bool hulls_intersect_s(const PointConfig& x, const SPartition& part,
                              const std::vector<int>& removed) {
  std::vector<int> rem = removed;
  std::sort(rem.begin(), rem.end());
  std::vector<std::vector<int>> survivors;
  for (const auto& block : part.blocks) {
    survivors.push_back(detail::surviving(block, rem));
    if (survivors.back().empty()) return false;
  }
  int s = static_cast<int>(survivors.size());
  int d = x.dim();
  int vars = 0;
  for (const auto& b : survivors) vars += static_cast<int>(b.size());
  RatMat m(d * (s - 1) + s, vars);
  std::vector<Rat> rhs(static_cast<std::size_t>(d) * (s - 1) + s);
  int col0 = 0;
  for (int t = 0; t < s; ++t) {
    for (std::size_t i = 0; i < survivors[t].size(); ++i) {
      const auto& p = x.point(survivors[t][i]);
      int col = col0 + static_cast<int>(i);
      if (t == 0) {
        for (int block = 0; block < s - 1; ++block)
          for (int j = 0; j < d; ++j) m.at(block * d + j, col) = p[j];
      } else {
        for (int j = 0; j < d; ++j) m.at((t - 1) * d + j, col) = -p[j];
      }
      m.at(d * (s - 1) + t, col) = 1;
    }
    col0 += static_cast<int>(survivors[t].size());
  }
  for (int t = 0; t < s; ++t) rhs[static_cast<std::size_t>(d) * (s - 1) + t] = 1;
  return lp_feasible_eq(m, rhs);
}

inline std::uint64_t stirling2(int n, int s) {
  if (s < 0 || s > n) return 0;
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(s) + 1, 0));
  t[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, s); ++j) t[i][j] = t[i - 1][j - 1] + j * t[i - 1][j];
  return t[n][s];
}

/// Searches set partitions into s nonempty blocks (restricted growth order)
/// for one whose s hulls share a point after every k-removal. The cap bounds
/// the number of partitions examined; an exhausted cap without a witness
/// leaves the verdict incomplete.
inline SDivisibilityResult is_s_k_divisible(const PointConfig& x, int s, int k,
                                            std::uint64_t cap = 1u << 20) {
  x.validate();
  if (s < 2) throw input_error("is_s_k_divisible: need s >= 2");
  if (s > x.size()) throw input_error("is_s_k_divisible: more blocks than points");
  if (!is_general_position(x))
    throw input_error("is_s_k_divisible: configuration not in general position");
  SDivisibilityResult result;
  result.s = s;
  result.k = k;
  result.total = stirling2(x.size(), s);
  std::vector<std::vector<int>> removals;
  for (const std::vector<int>& sub : subsets_of_size(x.size(), k)) {
    std::vector<int> labels(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) labels[i] = sub[i] + 1;
    removals.push_back(std::move(labels));
  }
  int n = x.size();
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);  // restricted growth string
  auto blocks_of = [&]() {
    SPartition p;
    p.blocks.assign(static_cast<std::size_t>(s), {});
    for (int i = 0; i < n; ++i) p.blocks[static_cast<std::size_t>(rgs[i])].push_back(i + 1);
    return p;
  };
  // iterate restricted growth strings with exactly s classes, lexicographically
  auto max_prefix = [&](int upto) {
    int mx = 0;
    for (int i = 0; i < upto; ++i) mx = std::max(mx, rgs[i]);
    return mx;
  };
  bool done = false;
  while (!done) {
    int classes = max_prefix(n) + 1;
    if (classes == s) {
      if (result.checked >= cap) {
        result.complete = false;
        return result;
      }
      ++result.checked;
      SPartition part = blocks_of();
      bool holds = true;
      for (const auto& rem : removals) {
        if (!hulls_intersect_s(x, part, rem)) {
          holds = false;
          break;
        }
      }
      if (holds) {
        result.divisible = true;
        result.witness = part;
        return result;
      }
    }
    // next restricted growth string
    int i = n - 1;
    for (; i >= 1; --i) {
      if (rgs[i] <= max_prefix(i) && rgs[i] < s - 1) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0) done = true;
  }
  result.divisible = false;
  return result;
}

/// The lower-bound instance generator: N = (k+1)d + (k+2) moment-curve
/// points, Gale-transformed down to a small configuration. The source
/// dimension reads either k(d+1)+1 (lands in dimension d) or k(d+1) (lands in
/// dimension d+1); both are produced for comparison.
inline PointConfig radonsote_instance(int d, int k, bool source_dim_plus_one = true) {
  if (d < 1 || k < 1) throw input_error("radonsote_instance: need d >= 1, k >= 1");
  int n = (k + 1) * d + (k + 2);
  int source_dim = k * (d + 1) + (source_dim_plus_one ? 1 : 0);
  if (n < source_dim + 2)
    throw input_error("radonsote_instance: not enough points for the source dimension");
  // Arithmetic-progression parameters often give affinely degenerate
  // diagrams, so walk a deterministic ladder of parameter choices until the
  // diagram lands in general position.
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rat> params;
    if (attempt == 0) {
      for (int i = 1; i <= n; ++i) params.push_back(Rat(i) * Rat(i));
    } else {
      SplitMix64 g(SplitMix64::at(0x9a1e5ce5u, attempt));
      std::set<long> seen;
      while (static_cast<int>(seen.size()) < n)
        seen.insert(static_cast<long>(g.below(static_cast<std::uint64_t>(20) * n * n)) - 10L * n * n);
      for (long t : seen) params.push_back(Rat(t));
    }
    GaleDiagram g = gale_transform(moment_curve_points(source_dim, params));
    PointConfig out;
    out.pts = g.vectors;
    if (is_general_position(out)) return out;
  }
  throw internal_inconsistency("radonsote_instance: no parameter choice gave a diagram in general position");
}

}  // namespace neighborly
