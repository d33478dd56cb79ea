#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "neighborly/bounds.hpp"
#include "neighborly/certificate.hpp"
#include "neighborly/circuits.hpp"
#include "neighborly/divide.hpp"
#include "neighborly/family.hpp"
#include "neighborly/gale.hpp"
#include "neighborly/geometry.hpp"
#include "neighborly/io.hpp"
#include "neighborly/rng.hpp"
#include "neighborly/travel.hpp"
#include "neighborly/worker_pool.hpp"

namespace neighborly {

/// Options shared by the enumerating verifiers.
struct RunOptions {
  std::string mode = "exhaustive";  // "exhaustive" or "sampled"
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 0;
  std::optional<double> max_seconds;
  std::optional<std::uint64_t> max_cases;
  std::uint64_t witness_cap = std::uint64_t{1} << 17;

  void validate() const {
    if (mode != "exhaustive" && mode != "sampled")
      throw input_error("mode must be 'exhaustive' or 'sampled'");
  }
  bool sampled() const { return mode == "sampled"; }
};

namespace detail {

/// The case ordinal -> point in a power-of-two space, shared by run and
/// replay so sampled certificates are reproducible.
inline std::uint64_t case_code(bool sampled, std::uint64_t seed, std::uint64_t ordinal, int bits) {
  if (!sampled) return ordinal;
  return SplitMix64::at(seed, ordinal) & ((std::uint64_t{1} << bits) - 1);
}

inline std::uint64_t intended_cases(const RunOptions& opts, int bits) {
  std::uint64_t space = std::uint64_t{1} << bits;
  std::uint64_t n = opts.sampled() ? opts.sample_count : space;
  if (opts.max_cases && *opts.max_cases < n) n = *opts.max_cases;
  return n;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::uint64_t elapsed_ms() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Travel criterion vs circuit enumeration over all (or sampled) sign
/// matrices of one shape. Certificate claim "prop-llom".
inline Certificate run_prop_llom(int rank, int cols, const RunOptions& opts) {
  opts.validate();
  if (cols < rank + 1) throw input_error("prop-llom: need n >= r+1");
  int bits = rank * cols;
  if (bits > 30) throw input_error("prop-llom: shape too large for enumeration");
  detail::Stopwatch timer;
  struct Agg {
    std::uint64_t cyclic = 0;
    std::uint64_t acyclic = 0;
    std::optional<std::uint64_t> bad_ordinal;
  };
  Agg all;
  std::uint64_t space_total = opts.sampled() ? opts.sample_count : (std::uint64_t{1} << bits);
  std::uint64_t todo = detail::intended_cases(opts, bits);
  std::uint64_t covered = parallel_reduce(
      todo, 4096, all,
      [&](Agg& a, std::uint64_t ordinal) {
        std::uint64_t code = detail::case_code(opts.sampled(), opts.seed, ordinal, bits);
        SignMatrix m = SignMatrix::from_code(rank, cols, code);
        bool travel = is_cyclic_travel(m);
        bool oracle = !is_acyclic_bruteforce(m);
        if (travel != oracle) {
          if (!a.bad_ordinal) a.bad_ordinal = ordinal;
          return;
        }
        (travel ? a.cyclic : a.acyclic) += 1;
      },
      [](Agg& into, Agg&& chunk) {
        into.cyclic += chunk.cyclic;
        into.acyclic += chunk.acyclic;
        if (!into.bad_ordinal) into.bad_ordinal = chunk.bad_ordinal;
      },
      Deadline::after_seconds(opts.max_seconds));
  bool complete = covered == space_total;
  Json witness{{"cyclic", all.cyclic}, {"acyclic", all.acyclic}};
  if (all.bad_ordinal) {
    std::uint64_t code = detail::case_code(opts.sampled(), opts.seed, *all.bad_ordinal, bits);
    witness["counterexample"] =
        Json{{"ordinal", *all.bad_ordinal},
             {"matrix", SignMatrix::from_code(rank, cols, code).to_text()}};
  }
  Certificate c = Certificate::make(
      "prop-llom", Json{{"rank", rank}, {"cols", cols}}, std::move(witness),
      complete && !all.bad_ordinal, covered, space_total, opts.mode,
      opts.sampled() ? std::optional<std::uint64_t>(opts.seed) : std::nullopt, !complete);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Plain-travel count vs acyclic reorientation classes, plus injectivity of
/// the travel-to-reorientation map with acyclic images. Claim "prop-pt".
inline Certificate run_prop_pt(int rank, int cols, const RunOptions& opts) {
  opts.validate();
  if (cols < rank + 1) throw input_error("prop-pt: need n >= r+1");
  int bits = rank * cols;
  if (bits > 24) throw input_error("prop-pt: shape too large for enumeration");
  detail::Stopwatch timer;
  std::vector<Travel> travels = plain_travels(SignMatrix::constant(rank, cols));
  struct Agg {
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> bad_ordinal;
  };
  Agg all;
  std::uint64_t space_total = opts.sampled() ? opts.sample_count : (std::uint64_t{1} << bits);
  std::uint64_t todo = detail::intended_cases(opts, bits);
  std::uint64_t covered = parallel_reduce(
      todo, 1024, all,
      [&](Agg& a, std::uint64_t ordinal) {
        std::uint64_t code = detail::case_code(opts.sampled(), opts.seed, ordinal, bits);
        SignMatrix m = SignMatrix::from_code(rank, cols, code);
        // acyclic reorientation classes via the circuit oracle
        std::uint64_t classes = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (cols - 1)); ++mask) {
          std::vector<int> flip;
          for (int j = 0; j < cols - 1; ++j)
            if ((mask >> j) & 1) flip.push_back(j + 2);
          if (is_acyclic_bruteforce(reorient(m, ReorientationSet(flip)))) ++classes;
        }
        bool ok = classes == travels.size();
        std::set<ReorientationSet> images;
        for (const Travel& t : travels) {
          ReorientationSet s = travel_to_reorientation(m, t);
          if (!is_acyclic_bruteforce(reorient(m, s))) ok = false;
          images.insert(s);
        }
        if (images.size() != travels.size()) ok = false;
        if (!ok && !a.bad_ordinal) a.bad_ordinal = ordinal;
        if (ok) a.checked += 1;
      },
      [](Agg& into, Agg&& chunk) {
        into.checked += chunk.checked;
        if (!into.bad_ordinal) into.bad_ordinal = chunk.bad_ordinal;
      },
      Deadline::after_seconds(opts.max_seconds));
  bool complete = covered == space_total;
  Json witness{{"travel_count", travels.size()}};
  if (all.bad_ordinal) witness["counterexample"] = Json{{"ordinal", *all.bad_ordinal}};
  Certificate c = Certificate::make(
      "prop-pt", Json{{"rank", rank}, {"cols", cols}}, std::move(witness),
      complete && !all.bad_ordinal, covered, space_total, opts.mode,
      opts.sampled() ? std::optional<std::uint64_t>(opts.seed) : std::nullopt, !complete);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Every realization of the family board is cyclic or admits a reorientation
/// within the budget |S| <= k. Claim "lemma-lbase" for k = 2, "lemma-general"
/// for k >= 3. Witness records the exit-shape histogram and, per acyclic
/// case, the minimal reorientation found.
inline Certificate run_family_verify(const FamilyParams& params, const RunOptions& opts) {
  opts.validate();
  FamilyBoard fb = build_board(params);
  detail::Stopwatch timer;
  int bits = params.rank + params.cols() - 1;
  if (bits > 40) throw input_error("family verify: realization space too large");
  struct Case {
    std::uint64_t ordinal;
    std::vector<int> s;
  };
  struct Agg {
    std::uint64_t cyclic = 0;
    std::uint64_t acyclic = 0;
    std::size_t max_s = 0;
    std::map<std::pair<int, int>, std::uint64_t> shapes;
    std::vector<Case> cases;
    std::optional<std::uint64_t> bad_ordinal;
  };
  Agg all;
  std::uint64_t space_total = opts.sampled() ? opts.sample_count : (std::uint64_t{1} << bits);
  std::uint64_t todo = detail::intended_cases(opts, bits);
  std::uint64_t covered = parallel_reduce(
      todo, 2048, all,
      [&](Agg& a, std::uint64_t ordinal) {
        std::uint64_t ridx = detail::case_code(opts.sampled(), opts.seed, ordinal, bits);
        SignMatrix m = board_realization(fb.board, ridx);
        auto s = min_cyclic_reorientation(m, params.k);
        if (!s) {
          if (!a.bad_ordinal) a.bad_ordinal = ordinal;
          return;
        }
        if (s->empty()) {
          a.cyclic += 1;
          return;
        }
        a.acyclic += 1;
        a.max_s = std::max(a.max_s, s->size());
        a.shapes[acyclic_travel_shape(m)] += 1;
        a.cases.push_back({ordinal, s->columns()});
      },
      [&](Agg& into, Agg&& chunk) {
        into.cyclic += chunk.cyclic;
        into.acyclic += chunk.acyclic;
        into.max_s = std::max(into.max_s, chunk.max_s);
        for (const auto& [shape, count] : chunk.shapes) into.shapes[shape] += count;
        for (Case& c : chunk.cases) {
          if (into.cases.size() < opts.witness_cap) into.cases.push_back(std::move(c));
        }
        if (!into.bad_ordinal) into.bad_ordinal = chunk.bad_ordinal;
      },
      Deadline::after_seconds(opts.max_seconds));
  bool complete = covered == space_total;
  bool truncated = all.cases.size() < all.acyclic;
  Json shapes = Json::array();
  for (const auto& [shape, count] : all.shapes)
    shapes.push_back(Json::array({shape.first, shape.second, count}));
  Json cases = Json::array();
  for (const Case& c : all.cases) cases.push_back(Json::array({c.ordinal, Json(c.s)}));
  Json witness{{"max_s", all.max_s},
               {"cyclic", all.cyclic},
               {"acyclic", all.acyclic},
               {"shapes", std::move(shapes)},
               {"cases", std::move(cases)},
               {"cases_truncated", truncated}};
  if (all.bad_ordinal) {
    std::uint64_t ridx =
        detail::case_code(opts.sampled(), opts.seed, *all.bad_ordinal, bits);
    witness["counterexample"] = Json{{"ordinal", *all.bad_ordinal},
                                     {"matrix", board_realization(fb.board, ridx).to_text()}};
  }
  Json instance{{"rank", params.rank}, {"k", params.k}, {"cols", params.cols()}};
  if (params.k >= 3) instance["l"] = params.l;
  Certificate c = Certificate::make(
      params.k == 2 ? "lemma-lbase" : "lemma-general", std::move(instance), std::move(witness),
      complete && !all.bad_ordinal, covered, space_total, opts.mode,
      opts.sampled() ? std::optional<std::uint64_t>(opts.seed) : std::nullopt, !complete);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Board construction certificate, claim "family-board".
inline Certificate run_family_build(const FamilyParams& params) {
  detail::Stopwatch timer;
  FamilyBoard fb = build_board(params);
  Json black = Json::array();
  for (auto [i, j] : fb.board.black_cells()) black.push_back(Json::array({i, j}));
  Json instance{{"rank", params.rank}, {"k", params.k}, {"cols", params.cols()}};
  if (params.k >= 3) instance["l"] = params.l;
  Json witness{{"rows", fb.board.rows()},
               {"cols", fb.board.cols()},
               {"black", std::move(black)},
               {"text", fb.board.to_text()}};
  Certificate c = Certificate::make("family-board", std::move(instance), std::move(witness), true,
                                    1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// k-divisibility search certificate, claim "k-divisible". Verified means
/// divisible; a refuted certificate carries one failing removal and an exact
/// separating hyperplane per bipartition.
inline Certificate run_divide(const PointConfig& x, int k) {
  detail::Stopwatch timer;
  DivisibilityResult r = is_k_divisible(x, k);
  std::uint64_t total = (std::uint64_t{1} << (x.size() - 1)) - 1;
  Json witness;
  std::uint64_t checked = 0;
  if (r.divisible) {
    witness = Json{{"divisible", true}, {"partition_a", r.witness->a}};
    checked = total;  // the verdict examined partitions up to the witness
  } else {
    Json refs = Json::array();
    for (const PartitionRefutation& ref : r.refutations)
      refs.push_back(Json{{"a", ref.partition.a},
                          {"removed", ref.removed},
                          {"plane", hyperplane_to_json(ref.plane)}});
    witness = Json{{"divisible", false}, {"refutations", std::move(refs)}};
    checked = total;
  }
  Certificate c = Certificate::make("k-divisible",
                                    Json{{"points", config_to_json(x)}, {"k", k}},
                                    std::move(witness), r.divisible, checked, total);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// s-fold divisibility search certificate, claim "s-k-divisible".
inline Certificate run_divide_s(const PointConfig& x, int s, int k,
                                std::uint64_t cap = std::uint64_t{1} << 20) {
  detail::Stopwatch timer;
  SDivisibilityResult r = is_s_k_divisible(x, s, k, cap);
  Json witness{{"divisible", r.divisible}};
  if (r.witness) {
    Json blocks = Json::array();
    for (const auto& b : r.witness->blocks) blocks.push_back(b);
    witness["blocks"] = std::move(blocks);
  }
  Certificate c = Certificate::make(
      "s-k-divisible", Json{{"points", config_to_json(x)}, {"s", s}, {"k", k}, {"cap", cap}},
      std::move(witness), r.divisible, r.checked, r.total, "", std::nullopt, !r.complete);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

namespace detail {

/// The three diagram invariants decided exactly: lifted orthogonality,
/// ones-orthogonality, full column rank.
inline bool gale_invariants_hold(const PointConfig& x, const GaleDiagram& g) {
  if (g.size() != x.size() || g.dim() != x.size() - x.dim() - 1) return false;
  RatMat lifted = lifted_matrix(x);
  for (int col = 0; col < g.dim(); ++col)
    for (int j = 0; j <= x.dim(); ++j) {
      Rat dot = 0;
      for (int i = 0; i < x.size(); ++i) dot += lifted.at(i, j) * g.vectors[i][col];
      if (dot != 0) return false;
    }
  RatMat gm(g.size(), g.dim());
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.dim(); ++j) gm.at(i, j) = g.vectors[i][j];
  return rank(gm) == g.dim();
}

}  // namespace detail

/// Gale transform certificate, claim "gale": the witness diagram satisfies
/// the kernel invariants; for n = d+2 the single column must reproduce the
/// Radon circuit signs up to one global flip.
inline Certificate run_gale(const PointConfig& x) {
  detail::Stopwatch timer;
  GaleDiagram g = gale_transform(x);
  bool ok = detail::gale_invariants_hold(x, g);
  if (x.size() == x.dim() + 2 && ok) {
    std::vector<int> labels(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> radon = radon_circuit_signs(x, labels);
    int flip = 0;
    for (int i = 0; i < x.size() && ok; ++i) {
      int gs = sign_of(g.vectors[i][0]);
      if (gs == 0) {
        ok = false;
        break;
      }
      if (flip == 0) flip = gs * radon[i];
      else if (gs * radon[i] != flip) ok = false;
    }
  }
  Certificate c = Certificate::make("gale", Json{{"points", config_to_json(x)}},
                                    Json{{"diagram", diagram_to_json(g)}}, ok, 1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Inverse transform certificate, claim "gale-inverse": the reconstructed
/// configuration must be orthogonal to the input diagram (which then spans
/// its whole Gale kernel).
inline Certificate run_gale_inverse(const GaleDiagram& g) {
  detail::Stopwatch timer;
  PointConfig x = gale_inverse(g);
  bool ok = detail::gale_invariants_hold(x, g);
  Certificate c = Certificate::make("gale-inverse", Json{{"diagram", diagram_to_json(g)}},
                                    Json{{"points", config_to_json(x)}}, ok, 1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Neighbourliness certificate, claim "neighbourly". On failure the witness
/// pins one violating circuit.
inline Certificate run_neighbourly(const PointConfig& x, int k) {
  detail::Stopwatch timer;
  x.validate();
  if (!is_general_position(x)) throw input_error("neighbourly: configuration not in general position");
  bool ok = true;
  Json witness;
  for (const std::vector<int>& sub : subsets_of_size(x.size(), x.dim() + 2)) {
    std::vector<int> labels(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) labels[i] = sub[i] + 1;
    std::vector<int> signs = radon_circuit_signs(x, labels);
    int pos = 0, neg = 0;
    for (int s : signs) (s > 0 ? pos : neg) += 1;
    if (pos <= k || neg <= k) {
      ok = false;
      witness["violating_circuit"] = labels;
      break;
    }
  }
  witness["neighbourly"] = ok;
  Certificate c = Certificate::make("neighbourly", Json{{"points", config_to_json(x)}, {"k", k}},
                                    std::move(witness), ok, 1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Sign-flip search certificate, claim "sign-flip": verified when some flip
/// of the configuration's Gale diagram has the k-removal hull property.
inline Certificate run_signflip(const PointConfig& x, int k) {
  detail::Stopwatch timer;
  GaleDiagram g = gale_transform(x);
  std::optional<SignVector> e = find_sign_flip(g, k);
  Json witness{{"found", e.has_value()}};
  if (e) witness["e"] = *e;
  Certificate c = Certificate::make("sign-flip", Json{{"points", config_to_json(x)}, {"k", k}},
                                    std::move(witness), e.has_value(), 1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Projective realization certificate, claim "projective-map": finds the
/// permissible map inducing the requested denominator signs.
inline Certificate run_projective(const PointConfig& x, const std::vector<int>& signs) {
  detail::Stopwatch timer;
  Json witness;
  bool ok = false;
  try {
    ProjectiveMap p = projective_from_signs(x, signs);
    Json c = Json::array();
    for (const Rat& v : p.c) c.push_back(rat_to_string(v));
    witness = Json{{"realizable", true}, {"c", std::move(c)}, {"delta", rat_to_string(p.delta)}};
    ok = true;
  } catch (const not_realizable&) {
    witness = Json{{"realizable", false}};
  }
  Certificate c = Certificate::make("projective-map",
                                    Json{{"points", config_to_json(x)}, {"signs", signs}},
                                    std::move(witness), ok, 1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

/// Travel computation certificate, claim "travel".
inline Certificate run_travel(const SignMatrix& m, const std::string& kind) {
  detail::Stopwatch timer;
  Json witness;
  if (kind == "top") witness["travel"] = travel_to_json(top_travel(m));
  else if (kind == "bottom") witness["travel"] = travel_to_json(bottom_travel(m));
  else if (kind == "plain") {
    Json arr = Json::array();
    for (const Travel& t : plain_travels(m)) arr.push_back(travel_to_json(t));
    witness["travels"] = std::move(arr);
  } else {
    throw input_error("travel: kind must be top, bottom, or plain");
  }
  Certificate c = Certificate::make("travel", Json{{"matrix", m.to_text()}, {"kind", kind}},
                                    std::move(witness), true, 1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

namespace detail {

inline Json bounds_map_to_json(const std::map<BoundTable::Key, Bounds>& m) {
  Json arr = Json::array();
  for (const auto& [key, b] : m) {
    Json row{{"d", key.first}, {"k", key.second}};
    if (b.lower) row["lower"] = *b.lower;
    if (b.upper) row["upper"] = *b.upper;
    arr.push_back(std::move(row));
  }
  return arr;
}

inline std::map<BoundTable::Key, Bounds> bounds_map_from_json(const Json& arr) {
  std::map<BoundTable::Key, Bounds> m;
  if (arr.is_null()) return m;
  for (const Json& row : arr) {
    Bounds b;
    if (row.contains("lower")) b.lower = row.at("lower").get<long>();
    if (row.contains("upper")) b.upper = row.at("upper").get<long>();
    m[{row.at("d").get<long>(), row.at("k").get<long>()}] = b;
  }
  return m;
}

}  // namespace detail

/// Index-relation propagation certificate, claim "bounds": loads a table of
/// lambda/mu/nu bounds, derives what the min/max relations imply, and fails
/// on any mu(d+1,k) = lambda(d,k) inconsistency.
inline Certificate run_bounds(const Json& table) {
  detail::Stopwatch timer;
  BoundTable t;
  t.lambda = detail::bounds_map_from_json(table.value("lambda", Json()));
  t.mu = detail::bounds_map_from_json(table.value("mu", Json()));
  t.nu = detail::bounds_map_from_json(table.value("nu", Json()));
  bool ok = true;
  Json derived = Json::array();
  try {
    t.check_consistency();
    std::set<long> ks;
    for (const auto& [key, b] : t.lambda) ks.insert(key.second);
    std::vector<BoundTable::Derived> all;
    for (auto d : t.derive_mu_from_lambda()) all.push_back(d);
    for (long k : ks)
      for (auto d : t.derive_nu_from_lambda(k)) all.push_back(d);
    for (long k : ks)
      for (auto d : t.derive_lambda_from_nu(k)) all.push_back(d);
    for (const auto& d : all)
      derived.push_back(Json{{"target", d.target},
                             {"d", d.d},
                             {"k", d.k},
                             {"bound", d.is_lower ? "lower" : "upper"},
                             {"value", d.value},
                             {"provenance", d.provenance}});
  } catch (const internal_inconsistency&) {
    ok = false;
  }
  Json witness{{"derived", std::move(derived)},
               {"lambda", detail::bounds_map_to_json(t.lambda)},
               {"mu", detail::bounds_map_to_json(t.mu)},
               {"nu", detail::bounds_map_to_json(t.nu)}};
  Certificate c = Certificate::make("bounds", Json{{"table", table}}, std::move(witness), ok, 1, 1);
  c.set_runtime_ms(timer.elapsed_ms());
  return c;
}

}  // namespace neighborly
