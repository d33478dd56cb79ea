#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace neighborly {

/// Exact rational scalar. All geometric predicates in this library are decided
/// over Rat with no floating point anywhere.
using Rat = mpq_class;

/// Thrown when a caller violates an operation's precondition.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when data passed between modules violates a documented contract
/// (e.g. a chessboard whose black cells do not form a staircase diagonal).
class contract_violation : public std::logic_error {
 public:
  explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a sign pattern is not induced by any affine hyperplane.
class not_realizable : public std::runtime_error {
 public:
  explicit not_realizable(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown if two routes that must always agree ever disagree. Must never fire.
class internal_inconsistency : public std::logic_error {
 public:
  explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

inline int sign_of(const Rat& q) { return sgn(q); }

/// Canonical text form of a rational: lowest terms, positive denominator,
/// "p/q" with "/q" omitted when q == 1.
inline std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

/// Parses "p", "-p", or "p/q". Rejects q == 0 and garbage.
inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw input_error("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw input_error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

/// All k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace neighborly
