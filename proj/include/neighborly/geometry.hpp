#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "neighborly/common.hpp"
#include "neighborly/linalg.hpp"
#include "neighborly/lp.hpp"
#include "neighborly/rng.hpp"

namespace neighborly {

/// n labelled points with exact rational coordinates in dimension d. Labels
/// are 1-based: point i is pts[i-1].
struct PointConfig {
  std::vector<std::vector<Rat>> pts;

  int size() const { return static_cast<int>(pts.size()); }
  int dim() const { return pts.empty() ? 0 : static_cast<int>(pts.front().size()); }

  const std::vector<Rat>& point(int label) const {
    if (label < 1 || label > size()) throw input_error("PointConfig: label out of range");
    return pts[static_cast<std::size_t>(label) - 1];
  }

  void validate() const {
    if (pts.empty()) throw input_error("PointConfig: empty");
    for (const auto& p : pts)
      if (static_cast<int>(p.size()) != dim())
        throw input_error("PointConfig: inconsistent dimensions");
  }
};

/// Rows (x_i, 1): the lifted matrix whose minors decide affine predicates.
inline RatMat lifted_matrix(const PointConfig& x) {
  RatMat l(x.size(), x.dim() + 1);
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < x.dim(); ++j) l.at(i, j) = x.pts[i][j];
    l.at(i, x.dim()) = 1;
  }
  return l;
}

inline Rat lifted_det(const PointConfig& x, const std::vector<int>& labels) {
  int d = x.dim();
  if (static_cast<int>(labels.size()) != d + 1) throw input_error("lifted_det: need d+1 labels");
  RatMat m(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    const auto& p = x.point(labels[i]);
    for (int j = 0; j < d; ++j) m.at(i, j) = p[j];
    m.at(i, d) = 1;
  }
  return determinant(m);
}

/// Every (d+1)-subset affinely independent, decided exactly. Vacuously true
/// when n <= d.
inline bool is_general_position(const PointConfig& x) {
  x.validate();
  if (x.size() <= x.dim()) return true;
  for (const std::vector<int>& sub : subsets_of_size(x.size(), x.dim() + 1)) {
    std::vector<int> labels(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) labels[i] = sub[i] + 1;
    if (lifted_det(x, labels) == 0) return false;
  }
  return true;
}

/// Points t -> (t, t^2, ..., t^d) on the moment curve. Distinct parameters
/// give vertices of a cyclic polytope, always in general position.
inline PointConfig moment_curve_points(int d, const std::vector<Rat>& params) {
  if (d < 1) throw input_error("moment_curve_points: need d >= 1");
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i] == params[j]) throw input_error("moment_curve_points: duplicate parameter");
  PointConfig x;
  for (const Rat& t : params) {
    std::vector<Rat> p(d);
    Rat pow = 1;
    for (int j = 0; j < d; ++j) {
      pow *= t;
      p[j] = pow;
    }
    x.pts.push_back(std::move(p));
  }
  return x;
}

/// Signed Radon circuit on a (d+2)-subset of labels: coefficients of the
/// unique affine dependence, alpha_t = (-1)^t det(lifted rows minus the t-th),
/// all nonzero in general position. The two sign classes of the dependence
/// are the two sides of the Radon partition.
inline std::vector<int> radon_circuit_signs(const PointConfig& x, const std::vector<int>& labels) {
  int d = x.dim();
  if (static_cast<int>(labels.size()) != d + 2)
    throw input_error("radon_circuit_signs: need d+2 labels");
  std::vector<int> signs(labels.size());
  for (std::size_t t = 0; t < labels.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t u = 0; u < labels.size(); ++u)
      if (u != t) rest.push_back(labels[u]);
    Rat det = lifted_det(x, rest);
    if (det == 0) throw input_error("radon_circuit_signs: points not in general position");
    // (-1)^i for 1-based position i, matching the sign-matrix circuit formula
    signs[t] = (t % 2 == 0 ? -1 : 1) * sign_of(det);
  }
  return signs;
}

/// Matroid form of k-neighbourliness: every k-subset of points spans a face,
/// which holds iff every signed circuit has more than k elements on each
/// side. (A circuit with |C+| <= k would put a whole positive side inside
/// some k-subset; at k = 1 this is exactly "every point is a vertex".)
inline bool is_k_neighbourly(const PointConfig& x, int k) {
  x.validate();
  if (x.size() < x.dim() + 2) throw input_error("is_k_neighbourly: need n >= d+2");
  for (const std::vector<int>& sub : subsets_of_size(x.size(), x.dim() + 2)) {
    std::vector<int> labels(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) labels[i] = sub[i] + 1;
    std::vector<int> signs = radon_circuit_signs(x, labels);
    int pos = 0, neg = 0;
    for (int s : signs) (s > 0 ? pos : neg) += 1;
    if (pos <= k || neg <= k) return false;
  }
  return true;
}

/// P(x) = (A x + b) / (<c, x> + delta). Regular: the lifted (d+1)x(d+1)
/// matrix is nonsingular. Permissible for a configuration: no denominator
/// vanishes on it.
struct ProjectiveMap {
  RatMat a;             // d x d
  std::vector<Rat> b;   // d
  std::vector<Rat> c;   // d
  Rat delta;

  int dim() const { return a.rows(); }

  static ProjectiveMap identity(int d) {
    ProjectiveMap p;
    p.a = RatMat(d, d);
    for (int i = 0; i < d; ++i) p.a.at(i, i) = 1;
    p.b.assign(d, Rat(0));
    p.c.assign(d, Rat(0));
    p.delta = 1;
    return p;
  }

  Rat denominator(const std::vector<Rat>& x) const {
    Rat s = delta;
    for (int j = 0; j < dim(); ++j) s += c[j] * x[j];
    return s;
  }

  bool is_regular() const {
    int d = dim();
    RatMat l(d + 1, d + 1);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) l.at(i, j) = a.at(i, j);
      l.at(i, d) = b[i];
    }
    for (int j = 0; j < d; ++j) l.at(d, j) = c[j];
    l.at(d, d) = delta;
    return determinant(l) != 0;
  }

  bool permissible_for(const PointConfig& x) const {
    for (const auto& p : x.pts)
      if (denominator(p) == 0) return false;
    return true;
  }
};

/// Exact image configuration under a permissible map.
inline PointConfig apply_projective(const ProjectiveMap& p, const PointConfig& x) {
  x.validate();
  if (p.dim() != x.dim()) throw input_error("apply_projective: dimension mismatch");
  if (!p.permissible_for(x))
    throw input_error("apply_projective: map not permissible for this configuration");
  PointConfig y;
  for (const auto& pt : x.pts) {
    Rat den = p.denominator(pt);
    std::vector<Rat> img(x.dim());
    for (int i = 0; i < x.dim(); ++i) {
      Rat num = p.b[i];
      for (int j = 0; j < x.dim(); ++j) num += p.a.at(i, j) * pt[j];
      img[i] = num / den;
    }
    y.pts.push_back(std::move(img));
  }
  return y;
}

/// Finds (c, delta) with sign(<c, x_i> + delta) = signs[i] for every point by
/// maximizing the worst margin, then returns the map with A = I, b = 0.
/// Throws not_realizable when no hyperplane induces the pattern. A zero delta
/// at the optimum is nudged by half the margin so the map is regular.
inline ProjectiveMap projective_from_signs(const PointConfig& x, const std::vector<int>& signs) {
  x.validate();
  if (static_cast<int>(signs.size()) != x.size())
    throw input_error("projective_from_signs: one sign per point required");
  for (int s : signs)
    if (s != 1 && s != -1) throw input_error("projective_from_signs: signs must be +-1");
  int n = x.size(), d = x.dim();
  if (std::all_of(signs.begin(), signs.end(), [&](int s) { return s == signs.front(); })) {
    // constant pattern: the constant denominator is canonical
    ProjectiveMap p = ProjectiveMap::identity(d);
    p.delta = signs.front();
    return p;
  }
  // variables: c+ (d), c- (d), delta+, delta-, t, point slacks (n), cap slack
  int vc_pos = 0, vc_neg = d, vdp = 2 * d, vdm = 2 * d + 1, vt = 2 * d + 2, vslack = 2 * d + 3;
  int cols = vslack + n + 1;
  RatMat a(n + 1, cols);
  std::vector<Rat> rhs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      a.at(i, vc_pos + j) = signs[i] * x.pts[i][j];
      a.at(i, vc_neg + j) = -signs[i] * x.pts[i][j];
    }
    a.at(i, vdp) = signs[i];
    a.at(i, vdm) = -signs[i];
    a.at(i, vt) = -1;
    a.at(i, vslack + i) = -1;
    rhs[i] = 0;
  }
  a.at(n, vt) = 1;  // t <= 1 keeps the objective bounded
  a.at(n, vslack + n) = 1;
  rhs[n] = 1;
  std::vector<Rat> cost(static_cast<std::size_t>(cols));
  cost[vt] = 1;
  LpSolution sol = lp_max_eq(a, rhs, cost);
  if (sol.status != LpSolution::Status::optimal || sol.value <= 0)
    throw not_realizable("projective_from_signs: sign pattern is not induced by any hyperplane");
  ProjectiveMap p = ProjectiveMap::identity(d);
  for (int j = 0; j < d; ++j) p.c[j] = sol.x[vc_pos + j] - sol.x[vc_neg + j];
  p.delta = sol.x[vdp] - sol.x[vdm];
  if (p.delta == 0) {
    Rat margin = sol.value;  // min_i signs[i] * (<c, x_i> + delta)
    p.delta = margin / 2;
  }
  return p;
}

/// Deterministic integer-coordinate configuration in general position,
/// resampled until the position predicate holds.
inline PointConfig random_general_position_config(std::uint64_t seed, int n, int d,
                                                  int coord_bound = 50) {
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    SplitMix64 g(SplitMix64::at(seed, attempt));
    PointConfig x;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> p(d);
      for (int j = 0; j < d; ++j)
        p[j] = Rat(static_cast<long>(g.below(2 * coord_bound + 1)) - coord_bound);
      x.pts.push_back(std::move(p));
    }
    if (is_general_position(x)) return x;
  }
  throw internal_inconsistency("random_general_position_config: resampling budget exhausted");
}

/// Seeded rational jitter of magnitude at most bound/denominator per
/// coordinate. Degenerate inputs are never silently perturbed by the
/// predicates themselves; callers opt in through this helper.
inline PointConfig perturb_config(const PointConfig& x, std::uint64_t seed, long denominator,
                                  long bound = 1) {
  if (denominator <= 0) throw input_error("perturb_config: denominator must be positive");
  PointConfig y = x;
  SplitMix64 g(seed);
  for (auto& p : y.pts)
    for (auto& coord : p) {
      Rat jitter(static_cast<long>(g.below(2 * bound + 1)) - bound, denominator);
      jitter.canonicalize();
      coord += jitter;
    }
  return y;
}

}  // namespace neighborly
