#include "neighborly/circuits.hpp"

#include <gtest/gtest.h>

#include "neighborly/sign_matrix.hpp"

namespace neighborly {
namespace {

TEST(CircuitSigns, AllPlusAlternatesAfterCanonicalization) {
  for (int r = 1; r <= 3; ++r) {
    SignMatrix a = SignMatrix::constant(r, r + 2);
    std::vector<int> support;
    for (int j = 1; j <= r + 1; ++j) support.push_back(j);
    SignedCircuit c = circuit_signs(a, support);
    for (int i = 0; i <= r; ++i) EXPECT_EQ(c.signs[i], i % 2 == 0 ? +1 : -1);
  }
}

TEST(CircuitSigns, RankOnePlusMinusIsUniform) {
  SignMatrix a = parse_sign_matrix("+-");
  SignedCircuit c = circuit_signs(a, {1, 2});
  EXPECT_EQ(c.signs, (std::vector<int>{1, 1}));
  EXPECT_TRUE(c.positive());
}

TEST(CircuitSigns, RejectsWrongSupportSize) {
  SignMatrix a = SignMatrix::constant(2, 4);
  EXPECT_THROW(circuit_signs(a, {1, 2}), input_error);
  EXPECT_THROW(circuit_signs(a, {1, 2, 2}), input_error);
}

TEST(CircuitSigns, ConsecutiveElementRelationHoldsExhaustively) {
  // C(e_{j_i}) * C(e_{j_{i+1}}) = -a(i, j_{i+1}) * a(i, j_i) for every
  // adjacent pair in every circuit, over all 2x4 and 3x5 matrices. The
  // relation is invariant under the canonical global flip.
  auto check_shape = [](int r, int n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (r * n)); ++code) {
      SignMatrix a = SignMatrix::from_code(r, n, code);
      for (const SignedCircuit& c : enumerate_circuits(a)) {
        for (std::size_t i = 0; i + 1 < c.support.size(); ++i) {
          int row = static_cast<int>(i) + 1;
          int lhs = c.signs[i] * c.signs[i + 1];
          int rhs = -a.at(row, c.support[i + 1]) * a.at(row, c.support[i]);
          ASSERT_EQ(lhs, rhs) << "shape " << r << "x" << n << " code " << code;
        }
      }
    }
  };
  check_shape(2, 4);
  check_shape(3, 5);
}

TEST(EnumerateCircuits, Counts) {
  EXPECT_EQ(enumerate_circuits(SignMatrix::constant(2, 3)).size(), 1u);
  EXPECT_EQ(enumerate_circuits(SignMatrix::constant(3, 5)).size(), 5u);
  auto cs = enumerate_circuits(SignMatrix::constant(2, 4));
  EXPECT_EQ(cs.size(), 4u);
  for (const SignedCircuit& c : cs) EXPECT_EQ(c.support.size(), 3u);
}

TEST(EnumerateCircuits, EmptyWhenNoCircuitsExist) {
  EXPECT_TRUE(enumerate_circuits(SignMatrix::constant(3, 3)).empty());
  EXPECT_TRUE(enumerate_circuits(SignMatrix::constant(3, 2)).empty());
}

TEST(IsAcyclicBruteforce, AllPlusIsAcyclic) {
  EXPECT_TRUE(is_acyclic_bruteforce(SignMatrix::constant(1, 2)));
  EXPECT_TRUE(is_acyclic_bruteforce(SignMatrix::constant(2, 3)));
  EXPECT_TRUE(is_acyclic_bruteforce(SignMatrix::constant(3, 5)));
}

TEST(IsAcyclicBruteforce, RankOneGroundTruth) {
  // (+ +) has the single circuit with signs (+,-): acyclic. (+ -) has a
  // uniform circuit: cyclic. Frozen as oracle ground truth for the travel
  // criterion.
  EXPECT_TRUE(is_acyclic_bruteforce(parse_sign_matrix("++")));
  EXPECT_FALSE(is_acyclic_bruteforce(parse_sign_matrix("+-")));
  EXPECT_FALSE(is_acyclic_bruteforce(parse_sign_matrix("-+")));
  EXPECT_TRUE(is_acyclic_bruteforce(parse_sign_matrix("--")));
}

}  // namespace
}  // namespace neighborly
