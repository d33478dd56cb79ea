#pragma once

#include <set>
#include <string>
#include <vector>

#include "neighborly/certificate.hpp"
#include "neighborly/verify.hpp"

namespace neighborly {

namespace detail {

/// Exact-recomputation replay: rebuild the certificate from its embedded
/// instance with the embedded mode/seed and compare everything except
/// runtime. Any witness or verdict tamper changes the comparable text.
inline bool replay_by_recompute(const Certificate& cert, const Certificate& fresh) {
  return cert.comparable_text() == fresh.comparable_text();
}

inline RunOptions options_of(const Certificate& cert) {
  RunOptions opts;
  opts.mode = cert.doc.value("mode", "exhaustive");
  if (cert.doc.contains("seed")) opts.seed = cert.doc.at("seed").get<std::uint64_t>();
  if (opts.sampled()) opts.sample_count = cert.total();
  return opts;
}

inline bool replay_family(const Certificate& cert) {
  const Json& inst = cert.instance();
  FamilyParams params{inst.at("rank").get<int>(), inst.at("k").get<int>(),
                      inst.value("l", 0)};
  FamilyBoard fb = build_board(params);
  if (inst.at("cols").get<int>() != params.cols()) return false;
  RunOptions opts = options_of(cert);
  int bits = params.rank + params.cols() - 1;
  const Json& w = cert.witness();
  // recompute the deterministic aggregates over exactly the covered prefix
  std::uint64_t cyclic = 0, acyclic = 0;
  std::map<std::pair<int, int>, std::uint64_t> shapes;
  std::vector<std::uint64_t> acyclic_ordinals;
  for (std::uint64_t ordinal = 0; ordinal < cert.checked(); ++ordinal) {
    std::uint64_t ridx = detail::case_code(opts.sampled(), opts.seed, ordinal, bits);
    SignMatrix m = board_realization(fb.board, ridx);
    if (is_cyclic_travel(m)) {
      ++cyclic;
    } else {
      ++acyclic;
      shapes[acyclic_travel_shape(m)] += 1;
      acyclic_ordinals.push_back(ordinal);
    }
  }
  if (w.at("cyclic").get<std::uint64_t>() != cyclic) return false;
  if (w.at("acyclic").get<std::uint64_t>() != acyclic) return false;
  Json shape_json = Json::array();
  for (const auto& [shape, count] : shapes)
    shape_json.push_back(Json::array({shape.first, shape.second, count}));
  if (w.at("shapes") != shape_json) return false;
  // recorded cases: ordinals must be exactly the acyclic ones (prefix when
  // truncated), every recorded set must work within budget
  const Json& cases = w.at("cases");
  bool truncated = w.value("cases_truncated", false);
  if (!truncated && cases.size() != acyclic_ordinals.size()) return false;
  if (truncated && cases.size() > acyclic_ordinals.size()) return false;
  std::size_t max_s = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::uint64_t ordinal = cases[i].at(0).get<std::uint64_t>();
    if (ordinal != acyclic_ordinals[i]) return false;
    std::vector<int> s = cases[i].at(1).get<std::vector<int>>();
    if (s.empty() || s.size() > static_cast<std::size_t>(params.k)) return false;
    std::uint32_t mask = 0;
    for (int col : s) {
      if (col < 1 || col > params.cols()) return false;
      mask |= std::uint32_t{1} << (col - 1);
    }
    std::uint64_t ridx = detail::case_code(opts.sampled(), opts.seed, ordinal, bits);
    SignMatrix m = board_realization(fb.board, ridx);
    if (!detail::cyclic_under_mask(m, mask)) return false;
    max_s = std::max(max_s, s.size());
  }
  if (!truncated && w.at("max_s").get<std::size_t>() != max_s) return false;
  bool complete = cert.checked() == cert.total();
  if (w.contains("counterexample")) return false;  // would falsify the lemma; never verified
  return cert.verified() == complete;
}

inline bool replay_divide(const Certificate& cert) {
  PointConfig x = config_from_json(cert.instance().at("points"));
  int k = cert.instance().at("k").get<int>();
  const Json& w = cert.witness();
  bool divisible = w.at("divisible").get<bool>();
  if (divisible != cert.verified()) return false;
  std::vector<std::vector<int>> removals;
  for (const std::vector<int>& sub : subsets_of_size(x.size(), k)) {
    std::vector<int> labels(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) labels[i] = sub[i] + 1;
    removals.push_back(std::move(labels));
  }
  if (divisible) {
    Partition part;
    part.a = w.at("partition_a").get<std::vector<int>>();
    std::set<int> in_a(part.a.begin(), part.a.end());
    for (int v = 1; v <= x.size(); ++v)
      if (!in_a.count(v)) part.b.push_back(v);
    try {
      part.validate(x.size());
    } catch (const input_error&) {
      return false;
    }
    for (const auto& rem : removals)
      if (!hulls_intersect(x, part, rem)) return false;
    return true;
  }
  // refuted: one refutation per bipartition, in order; the recorded removal
  // must be the first failing one and the plane must strictly separate
  std::vector<Partition> parts = all_bipartitions(x.size());
  const Json& refs = w.at("refutations");
  if (refs.size() != parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Json& ref = refs[i];
    if (ref.at("a").get<std::vector<int>>() != parts[i].a) return false;
    std::vector<int> removed = ref.at("removed").get<std::vector<int>>();
    std::vector<int> first_failing;
    for (const auto& rem : removals) {
      if (!hulls_intersect(x, parts[i], rem)) {
        first_failing = rem;
        break;
      }
    }
    if (first_failing.empty() || first_failing != removed) return false;
    Hyperplane plane = hyperplane_from_json(ref.at("plane"));
    if (static_cast<int>(plane.c.size()) != x.dim()) return false;
    std::set<int> rem_set(removed.begin(), removed.end());
    for (int label : parts[i].a)
      if (!rem_set.count(label) && sign_of(plane.eval(x.point(label))) <= 0) return false;
    for (int label : parts[i].b)
      if (!rem_set.count(label) && sign_of(plane.eval(x.point(label))) >= 0) return false;
  }
  return true;
}

inline bool replay_divide_s(const Certificate& cert) {
  PointConfig x = config_from_json(cert.instance().at("points"));
  int s = cert.instance().at("s").get<int>();
  int k = cert.instance().at("k").get<int>();
  std::uint64_t cap = cert.instance().at("cap").get<std::uint64_t>();
  const Json& w = cert.witness();
  if (w.at("divisible").get<bool>() != cert.verified()) return false;
  if (cert.verified()) {
    SPartition part;
    for (const Json& b : w.at("blocks")) part.blocks.push_back(b.get<std::vector<int>>());
    if (static_cast<int>(part.blocks.size()) != s) return false;
    std::set<int> seen;
    for (const auto& b : part.blocks) {
      if (b.empty()) return false;
      for (int v : b) {
        if (v < 1 || v > x.size() || seen.count(v)) return false;
        seen.insert(v);
      }
    }
    if (static_cast<int>(seen.size()) != x.size()) return false;
    std::vector<std::vector<int>> removals;
    for (const std::vector<int>& sub : subsets_of_size(x.size(), k)) {
      std::vector<int> labels(sub.size());
      for (std::size_t i = 0; i < sub.size(); ++i) labels[i] = sub[i] + 1;
      removals.push_back(std::move(labels));
    }
    for (const auto& rem : removals)
      if (!hulls_intersect_s(x, part, rem)) return false;
    return true;
  }
  // refuted or partial: deterministic re-run must reproduce the verdict
  SDivisibilityResult r = is_s_k_divisible(x, s, k, cap);
  return r.divisible == false && r.checked == cert.checked() &&
         (!r.complete) == cert.partial();
}

}  // namespace detail

/// Re-verifies a certificate against its embedded instance. Deterministic
/// computations are replayed exactly and compared; search results are
/// re-validated through the pure predicates without repeating the search.
/// Returns false on any mismatch; throws input_error on malformed documents.
inline bool replay(const Certificate& cert) {
  const std::string claim = cert.claim();
  if (claim == "prop-llom") {
    return detail::replay_by_recompute(
        cert, run_prop_llom(cert.instance().at("rank").get<int>(),
                            cert.instance().at("cols").get<int>(), detail::options_of(cert)));
  }
  if (claim == "prop-pt") {
    return detail::replay_by_recompute(
        cert, run_prop_pt(cert.instance().at("rank").get<int>(),
                          cert.instance().at("cols").get<int>(), detail::options_of(cert)));
  }
  if (claim == "lemma-lbase" || claim == "lemma-general") return detail::replay_family(cert);
  if (claim == "family-board") {
    const Json& inst = cert.instance();
    FamilyParams params{inst.at("rank").get<int>(), inst.at("k").get<int>(), inst.value("l", 0)};
    return detail::replay_by_recompute(cert, run_family_build(params));
  }
  if (claim == "k-divisible") return detail::replay_divide(cert);
  if (claim == "s-k-divisible") return detail::replay_divide_s(cert);
  if (claim == "gale")
    return detail::replay_by_recompute(cert,
                                       run_gale(config_from_json(cert.instance().at("points"))));
  if (claim == "gale-inverse")
    return detail::replay_by_recompute(
        cert, run_gale_inverse(diagram_from_json(cert.instance().at("diagram"))));
  if (claim == "neighbourly")
    return detail::replay_by_recompute(
        cert, run_neighbourly(config_from_json(cert.instance().at("points")),
                              cert.instance().at("k").get<int>()));
  if (claim == "sign-flip")
    return detail::replay_by_recompute(
        cert, run_signflip(config_from_json(cert.instance().at("points")),
                           cert.instance().at("k").get<int>()));
  if (claim == "projective-map")
    return detail::replay_by_recompute(
        cert, run_projective(config_from_json(cert.instance().at("points")),
                             cert.instance().at("signs").get<std::vector<int>>()));
  if (claim == "travel")
    return detail::replay_by_recompute(
        cert, run_travel(parse_sign_matrix(cert.instance().at("matrix").get<std::string>()),
                         cert.instance().at("kind").get<std::string>()));
  if (claim == "bounds")
    return detail::replay_by_recompute(cert, run_bounds(cert.instance().at("table")));
  throw input_error("replay: unknown claim '" + claim + "'");
}

}  // namespace neighborly
