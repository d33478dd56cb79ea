#include "neighborly/lp.hpp"

#include <gtest/gtest.h>

namespace neighborly {
namespace {

RatMat mat(int rows, int cols, std::vector<long> vals) {
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(vals[static_cast<std::size_t>(i) * cols + j]);
  return m;
}

std::vector<Rat> vec(std::vector<long> vals) {
  std::vector<Rat> v;
  for (long x : vals) v.push_back(Rat(x));
  return v;
}

TEST(LpFeasible, SimpleSystems) {
  // x + y = 1, x,y >= 0
  EXPECT_TRUE(lp_feasible_eq(mat(1, 2, {1, 1}), vec({1})));
  // x + y = -1 has no nonnegative solution
  EXPECT_FALSE(lp_feasible_eq(mat(1, 2, {1, 1}), vec({-1})));
  // x - y = 0, x + y = 2
  EXPECT_TRUE(lp_feasible_eq(mat(2, 2, {1, -1, 1, 1}), vec({0, 2})));
  // x = 1, x = 2 inconsistent
  EXPECT_FALSE(lp_feasible_eq(mat(2, 1, {1, 1}), vec({1, 2})));
  // redundant rows are fine: x + y = 1 twice
  EXPECT_TRUE(lp_feasible_eq(mat(2, 2, {1, 1, 1, 1}), vec({1, 1})));
}

TEST(LpMax, BoundedOptimum) {
  // max x st x + s = 5
  LpSolution sol = lp_max_eq(mat(1, 2, {1, 1}), vec({5}), vec({1, 0}));
  ASSERT_EQ(sol.status, LpSolution::Status::optimal);
  EXPECT_EQ(sol.value, Rat(5));
  EXPECT_EQ(sol.x[0], Rat(5));
}

TEST(LpMax, TwoConstraints) {
  // max 3x + 2y st x + y + s1 = 4, x + 3y + s2 = 6; optimum at (4,0): 12
  LpSolution sol = lp_max_eq(mat(2, 4, {1, 1, 1, 0, 1, 3, 0, 1}), vec({4, 6}), vec({3, 2, 0, 0}));
  ASSERT_EQ(sol.status, LpSolution::Status::optimal);
  EXPECT_EQ(sol.value, Rat(12));
}

TEST(LpMax, RationalOptimum) {
  // max x + y st 2x + y + s1 = 3, x + 3y + s2 = 4: vertex x=1, y=1 value 2
  LpSolution sol = lp_max_eq(mat(2, 4, {2, 1, 1, 0, 1, 3, 0, 1}), vec({3, 4}), vec({1, 1, 0, 0}));
  ASSERT_EQ(sol.status, LpSolution::Status::optimal);
  EXPECT_EQ(sol.value, Rat(2));
  EXPECT_EQ(sol.x[0], Rat(1));
  EXPECT_EQ(sol.x[1], Rat(1));
}

TEST(LpMax, Unbounded) {
  // max x st x - y = 0
  LpSolution sol = lp_max_eq(mat(1, 2, {1, -1}), vec({0}), vec({1, 0}));
  EXPECT_EQ(sol.status, LpSolution::Status::unbounded);
}

TEST(LpMax, InfeasibleReported) {
  LpSolution sol = lp_max_eq(mat(1, 1, {1}), vec({-2}), vec({1}));
  EXPECT_EQ(sol.status, LpSolution::Status::infeasible);
  EXPECT_FALSE(sol.feasible());
}

TEST(LpMax, DegenerateSystemTerminates) {
  // several redundant constraints pinning x = 1
  LpSolution sol = lp_max_eq(mat(3, 2, {1, 0, 1, 0, 2, 0}), vec({1, 1, 2}), vec({1, 0}));
  ASSERT_EQ(sol.status, LpSolution::Status::optimal);
  EXPECT_EQ(sol.value, Rat(1));
}

}  // namespace
}  // namespace neighborly
