#pragma once

#include <optional>
#include <vector>

#include "neighborly/common.hpp"
#include "neighborly/geometry.hpp"
#include "neighborly/linalg.hpp"
#include "neighborly/lp.hpp"

namespace neighborly {

/// Gale diagram of n points in dimension d: n vectors in dimension n-d-1
/// spanning the kernel of the lifted configuration. Vector i belongs to
/// point label i.
struct GaleDiagram {
  std::vector<std::vector<Rat>> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
  int dim() const { return vectors.empty() ? 0 : static_cast<int>(vectors.front().size()); }

  void validate() const {
    if (vectors.empty()) throw input_error("GaleDiagram: empty");
    for (const auto& v : vectors)
      if (static_cast<int>(v.size()) != dim())
        throw input_error("GaleDiagram: inconsistent dimensions");
  }
};

/// A choice of sign per diagram vector (the epsilon sequence).
using SignVector = std::vector<int>;

inline GaleDiagram flipped(const GaleDiagram& g, const SignVector& e) {
  if (static_cast<int>(e.size()) != g.size())
    throw input_error("flipped: one sign per vector required");
  GaleDiagram out = g;
  for (int i = 0; i < g.size(); ++i) {
    if (e[i] != 1 && e[i] != -1) throw input_error("flipped: signs must be +-1");
    if (e[i] < 0)
      for (Rat& v : out.vectors[i]) v = -v;
  }
  return out;
}

/// The canonical Gale transform: columns of the kernel basis of the lifted
/// matrix transposed (reduced echelon kernel, pivoting on smallest indices),
/// read off as one row vector per point.
inline GaleDiagram gale_transform(const PointConfig& x) {
  x.validate();
  if (x.size() < x.dim() + 2) throw input_error("gale_transform: need n >= d+2");
  if (!is_general_position(x))
    throw input_error("gale_transform: configuration not in general position");
  std::vector<std::vector<Rat>> basis = kernel_basis(lifted_matrix(x).transposed());
  if (static_cast<int>(basis.size()) != x.size() - x.dim() - 1)
    throw internal_inconsistency("gale_transform: kernel dimension mismatch");
  GaleDiagram g;
  g.vectors.assign(x.size(), std::vector<Rat>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (int i = 0; i < x.size(); ++i) g.vectors[i][col] = basis[col][i];
  return g;
}

/// Reconstructs an n-point configuration in dimension n-m-1 whose Gale
/// diagram spans the same kernel as g. The kernel of the diagram contains the
/// all-ones vector (because 1.G = 0); the basis is changed so that vector
/// becomes the lifting column and the remaining columns become coordinates.
inline PointConfig gale_inverse(const GaleDiagram& g) {
  g.validate();
  int n = g.size(), m = g.dim();
  if (n - m - 1 < 1) throw input_error("gale_inverse: diagram has no room for a configuration");
  RatMat gm(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) gm.at(i, j) = g.vectors[i][j];
  std::vector<std::vector<Rat>> basis = kernel_basis(gm.transposed());
  int d1 = n - m;  // kernel dimension, = d + 1
  if (static_cast<int>(basis.size()) != d1)
    throw input_error("gale_inverse: diagram does not have full rank");
  RatMat k(n, d1);
  for (int col = 0; col < d1; ++col)
    for (int i = 0; i < n; ++i) k.at(i, col) = basis[static_cast<std::size_t>(col)][i];
  auto w = solve_unique(k, std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
  if (!w) throw input_error("gale_inverse: all-ones vector not in the kernel (1.G != 0)");
  int drop = -1;
  for (int j = 0; j < d1; ++j) {
    if ((*w)[j] != 0) {
      drop = j;
      break;
    }
  }
  PointConfig x;
  x.pts.assign(n, std::vector<Rat>());
  for (int i = 0; i < n; ++i) {
    x.pts[i].reserve(static_cast<std::size_t>(d1) - 1);
    for (int j = 0; j < d1; ++j)
      if (j != drop) x.pts[i].push_back(k.at(i, j));
  }
  return x;
}

/// Membership of the origin in conv(vectors): exact feasibility of a convex
/// combination. With `relative_interior` the combination must be strictly
/// positive on every vector (the form one direction of the equivalence proofs
/// uses); the closed hull is the default.
inline bool zero_in_hull(const std::vector<std::vector<Rat>>& vectors, bool relative_interior = false) {
  if (vectors.empty()) return false;
  int n = static_cast<int>(vectors.size());
  int dim = static_cast<int>(vectors.front().size());
  if (!relative_interior) {
    RatMat a(dim + 1, n);
    std::vector<Rat> rhs(static_cast<std::size_t>(dim) + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < dim; ++j) a.at(j, i) = vectors[i][j];
      a.at(dim, i) = 1;
    }
    rhs[dim] = 1;
    return lp_feasible_eq(a, rhs);
  }
  // max t subject to sum lambda v = 0, sum lambda = 1, lambda_i - t - s_i = 0
  int vt = n, vs = n + 1;
  int cols = vs + n;
  RatMat a(dim + 1 + n, cols);
  std::vector<Rat> rhs(static_cast<std::size_t>(dim) + 1 + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < dim; ++j) a.at(j, i) = vectors[i][j];
  for (int i = 0; i < n; ++i) a.at(dim, i) = 1;
  rhs[dim] = 1;
  for (int i = 0; i < n; ++i) {
    a.at(dim + 1 + i, i) = 1;
    a.at(dim + 1 + i, vt) = -1;
    a.at(dim + 1 + i, vs + i) = -1;
  }
  std::vector<Rat> cost(static_cast<std::size_t>(cols));
  cost[vt] = 1;
  LpSolution sol = lp_max_eq(a, rhs, cost);
  return sol.status == LpSolution::Status::optimal && sol.value > 0;
}

/// For every k-subset K of the labels, the origin lies in the hull of the
/// remaining diagram vectors.
inline bool zero_in_hull_complements(const GaleDiagram& g, int k, bool relative_interior = false) {
  g.validate();
  if (k < 0) throw input_error("zero_in_hull_complements: k must be >= 0");
  if (k >= g.size()) return false;
  for (const std::vector<int>& removed : subsets_of_size(g.size(), k)) {
    std::vector<std::vector<Rat>> rest;
    std::size_t r = 0;
    for (int i = 0; i < g.size(); ++i) {
      if (r < removed.size() && removed[r] == i) {
        ++r;
        continue;
      }
      rest.push_back(g.vectors[i]);
    }
    if (!zero_in_hull(rest, relative_interior)) return false;
  }
  return true;
}

/// Smallest sign vector (lexicographically, +1 before -1, first sign fixed to
/// +1 by the central symmetry of hull membership) whose flip gives the
/// diagram the k-removal hull property; nullopt when none exists.
inline std::optional<SignVector> find_sign_flip(const GaleDiagram& g, int k,
                                                bool relative_interior = false) {
  g.validate();
  int n = g.size();
  if (n > 30) throw input_error("find_sign_flip: n too large for exhaustive sign search");
  std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SignVector e(n, 1);
    // lexicographic order: e[1] is the most significant digit
    for (int i = 1; i < n; ++i)
      if ((mask >> (n - 1 - i)) & 1) e[i] = -1;
    if (zero_in_hull_complements(flipped(g, e), k, relative_interior)) return e;
  }
  return std::nullopt;
}

}  // namespace neighborly
