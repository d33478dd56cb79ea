#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neighborly/common.hpp"

namespace neighborly {

/// The Tverberg-type arithmetic lower bound (k+1)((s-1)(d-1)+1).
inline long tverberg_bound(long d, long s, long k) {
  if (d < 1 || s < 2 || k < 0) throw input_error("tverberg_bound: need d >= 1, s >= 2, k >= 0");
  return (k + 1) * ((s - 1) * (d - 1) + 1);
}

/// Interval bounds for one index function at one (d, k).
struct Bounds {
  std::optional<long> lower;
  std::optional<long> upper;
};

/// Tables of verified bounds for the three index functions, keyed by (d, k):
///   nu(d,k): largest n with every n-point set projectively k-mappable,
///   lambda(d,k): smallest n forcing a k-removal-proof bipartition,
///   mu(d,k): the spherical sign-flip threshold, mu(d+1,k) = lambda(d,k).
/// The relations used for propagation:
///   nu(d,k) = max{ w : w >= lambda(w-d-2, k) },
///   mu(d,k) = min{ w : w <= nu(w-d-1, k) }.
/// Feeding an upper bound for lambda through the max-relation yields a lower
/// bound for nu, and a lower bound yields an upper bound.
class BoundTable {
 public:
  using Key = std::pair<long, long>;  // (d, k)

  std::map<Key, Bounds> lambda;
  std::map<Key, Bounds> mu;
  std::map<Key, Bounds> nu;

  /// One derived value with its provenance chain.
  struct Derived {
    std::string target;  // e.g. "nu"
    long d = 0;
    long k = 0;
    bool is_lower = false;
    long value = 0;
    std::string provenance;
  };

  /// Enforces mu(d+1,k) = lambda(d,k) on whatever is present; throws
  /// internal_inconsistency on any violation.
  void check_consistency() const {
    for (const auto& [key, lb] : lambda) {
      auto it = mu.find({key.first + 1, key.second});
      if (it == mu.end()) continue;
      const Bounds& mb = it->second;
      if (lb.lower && mb.upper && *lb.lower > *mb.upper)
        throw internal_inconsistency("bound table violates mu(d+1,k) = lambda(d,k)");
      if (lb.upper && mb.lower && *mb.lower > *lb.upper)
        throw internal_inconsistency("bound table violates mu(d+1,k) = lambda(d,k)");
    }
  }

  /// Copies lambda rows into mu rows via mu(d+1,k) = lambda(d,k).
  std::vector<Derived> derive_mu_from_lambda() {
    std::vector<Derived> out;
    for (const auto& [key, lb] : lambda) {
      Bounds& mb = mu[{key.first + 1, key.second}];
      if (lb.lower && (!mb.lower || *mb.lower < *lb.lower)) {
        mb.lower = lb.lower;
        out.push_back({"mu", key.first + 1, key.second, true, *lb.lower,
                       "mu(d+1,k) = lambda(d,k) from lambda(" + std::to_string(key.first) + "," +
                           std::to_string(key.second) + ")"});
      }
      if (lb.upper && (!mb.upper || *mb.upper > *lb.upper)) {
        mb.upper = lb.upper;
        out.push_back({"mu", key.first + 1, key.second, false, *lb.upper,
                       "mu(d+1,k) = lambda(d,k) from lambda(" + std::to_string(key.first) + "," +
                           std::to_string(key.second) + ")"});
      }
    }
    check_consistency();
    return out;
  }

  /// nu(d,k) bounds through the max-relation. The scan over w needs lambda
  /// covered at w-d-2 up to the first failing w; when the table runs out
  /// before the condition fails, the arithmetic does not close and nothing is
  /// derived for that (d,k).
  std::vector<Derived> derive_nu_from_lambda(long k) {
    std::vector<Derived> out;
    long max_d = 0;
    for (const auto& [key, b] : lambda)
      if (key.second == k) max_d = std::max(max_d, key.first);
    for (long d = 1; d <= max_d + 2; ++d) {
      for (bool use_upper : {true, false}) {
        std::optional<long> best;
        bool closed = false;
        for (long w = d + 3;; ++w) {
          auto it = lambda.find({w - d - 2, k});
          if (it == lambda.end()) break;
          const auto& side = use_upper ? it->second.upper : it->second.lower;
          if (!side) break;
          if (w >= *side) {
            best = w;
          } else {
            closed = true;  // condition failed inside covered range: max is final
            break;
          }
        }
        if (!best || !closed) continue;
        Bounds& nb = nu[{d, k}];
        auto& slot = use_upper ? nb.lower : nb.upper;
        if (!slot || (use_upper ? *slot < *best : *slot > *best)) {
          slot = best;
          out.push_back({"nu", d, k, use_upper, *best,
                         std::string("nu = max{w : w >= lambda(w-d-2,k)} using lambda ") +
                             (use_upper ? "upper" : "lower") + " bounds"});
        }
      }
    }
    return out;
  }

  /// lambda(d,k) bounds through the min-relation lambda = min{w : w <=
  /// nu(w-d-2,k)}. A nu lower bound certifies membership of some w (lambda
  /// upper bound); a nu upper bound rules out all smaller w (lambda lower
  /// bound of the first non-excluded w), provided the scan stays covered.
  std::vector<Derived> derive_lambda_from_nu(long k) {
    std::vector<Derived> out;
    long max_d = 0;
    for (const auto& [key, b] : nu)
      if (key.second == k) max_d = std::max(max_d, key.first);
    for (long d = 1; d <= max_d; ++d) {
      // upper: first covered w with w <= nu_lower(w-d-2,k)
      for (long w = d + 3;; ++w) {
        auto it = nu.find({w - d - 2, k});
        if (it == nu.end() || !it->second.lower) break;
        if (w <= *it->second.lower) {
          Bounds& lb = lambda[{d, k}];
          if (!lb.upper || *lb.upper > w) {
            lb.upper = w;
            out.push_back({"lambda", d, k, false, w,
                           "lambda = min{w : w <= nu(w-d-2,k)} using nu lower bounds"});
          }
          break;
        }
      }
      // lower: scan while w > nu_upper(w-d-2,k) excludes w
      std::optional<long> first_possible;
      for (long w = d + 3;; ++w) {
        auto it = nu.find({w - d - 2, k});
        if (it == nu.end() || !it->second.upper) break;
        if (w > *it->second.upper) continue;
        first_possible = w;
        break;
      }
      if (first_possible) {
        Bounds& lb = lambda[{d, k}];
        if (!lb.lower || *lb.lower < *first_possible) {
          lb.lower = first_possible;
          out.push_back({"lambda", d, k, true, *first_possible,
                         "lambda = min{w : w <= nu(w-d-2,k)} using nu upper bounds"});
        }
      }
    }
    check_consistency();
    return out;
  }

  /// Copies mu rows back into lambda rows via lambda(d,k) = mu(d+1,k).
  std::vector<Derived> derive_lambda_from_mu() {
    std::vector<Derived> out;
    for (const auto& [key, mb] : mu) {
      if (key.first < 2) continue;
      Bounds& lb = lambda[{key.first - 1, key.second}];
      if (mb.lower && (!lb.lower || *lb.lower < *mb.lower)) {
        lb.lower = mb.lower;
        out.push_back({"lambda", key.first - 1, key.second, true, *mb.lower,
                       "lambda(d,k) = mu(d+1,k)"});
      }
      if (mb.upper && (!lb.upper || *lb.upper > *mb.upper)) {
        lb.upper = mb.upper;
        out.push_back({"lambda", key.first - 1, key.second, false, *mb.upper,
                       "lambda(d,k) = mu(d+1,k)"});
      }
    }
    check_consistency();
    return out;
  }
};

}  // namespace neighborly
