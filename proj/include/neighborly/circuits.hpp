#pragma once

#include <vector>

#include "neighborly/common.hpp"
#include "neighborly/sign_matrix.hpp"

namespace neighborly {

/// A signed circuit of the rank-r Lawrence oriented matroid. Supports are the
/// (r+1)-column subsets; the canonical representative of the pair {C, -C}
/// fixes the sign of the smallest support column to +1.
struct SignedCircuit {
  std::vector<int> support;  // strictly increasing column indices, size r+1
  std::vector<int> signs;    // +-1 per support element

  bool positive() const {
    for (int s : signs)
      if (s != signs.front()) return false;
    return true;  // uniform after canonicalization means the pair contains a positive circuit
  }

  bool operator==(const SignedCircuit& other) const {
    return support == other.support && signs == other.signs;
  }
};

/// Sign of the i-th support element (1-based position i within the support):
/// (-1)^i times the chirotope of the remaining r columns. The result is
/// canonicalized so the first support element carries +1. This convention
/// satisfies, for every adjacent pair,
///   C(e_{j_i}) * C(e_{j_{i+1}}) = -a(i, j_{i+1}) * a(i, j_i).
inline SignedCircuit circuit_signs(const SignMatrix& m, const std::vector<int>& support) {
  int r = m.rows();
  if (static_cast<int>(support.size()) != r + 1)
    throw input_error("circuit_signs: support size must be r+1");
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 1 || support[i] > m.cols())
      throw input_error("circuit_signs: support column out of range");
    if (i > 0 && support[i] <= support[i - 1])
      throw input_error("circuit_signs: support must be strictly increasing");
  }
  SignedCircuit c;
  c.support = support;
  c.signs.resize(support.size());
  for (int i = 1; i <= r + 1; ++i) {
    // chirotope of the support minus its i-th element: rows t pair with the
    // t-th smallest remaining column.
    int prod = 1;
    int row = 1;
    for (int t = 1; t <= r + 1; ++t) {
      if (t == i) continue;
      prod *= m.at(row, support[static_cast<std::size_t>(t) - 1]);
      ++row;
    }
    c.signs[static_cast<std::size_t>(i) - 1] = (i % 2 == 0 ? prod : -prod);
  }
  if (c.signs.front() < 0)
    for (int& s : c.signs) s = -s;
  return c;
}

/// One canonical circuit per (r+1)-subset of columns, in lexicographic
/// support order. Empty when n <= r.
inline std::vector<SignedCircuit> enumerate_circuits(const SignMatrix& m) {
  std::vector<SignedCircuit> out;
  int r = m.rows(), n = m.cols();
  if (n <= r) return out;
  for (const std::vector<int>& zero_based : subsets_of_size(n, r + 1)) {
    std::vector<int> support(zero_based.size());
    for (std::size_t i = 0; i < support.size(); ++i) support[i] = zero_based[i] + 1;
    out.push_back(circuit_signs(m, support));
  }
  return out;
}

/// Brute-force acyclicity: no circuit pair {C, -C} contains a positive
/// circuit, i.e. no canonical circuit is uniformly signed. This is the
/// independent oracle against which the travel criterion is checked.
inline bool is_acyclic_bruteforce(const SignMatrix& m) {
  if (m.cols() < m.rows() + 1)
    throw input_error("is_acyclic_bruteforce: need n >= r+1");
  for (const SignedCircuit& c : enumerate_circuits(m))
    if (c.positive()) return false;
  return true;
}

}  // namespace neighborly
