#include "neighborly/geometry.hpp"

#include <gtest/gtest.h>

namespace neighborly {
namespace {

PointConfig config(std::vector<std::vector<long>> rows) {
  PointConfig x;
  for (auto& r : rows) {
    std::vector<Rat> p;
    for (long v : r) p.push_back(Rat(v));
    x.pts.push_back(std::move(p));
  }
  return x;
}

TEST(GeneralPosition, DistinctScalarsOnTheLine) {
  EXPECT_TRUE(is_general_position(config({{0}, {1}, {2}, {3}})));
  EXPECT_FALSE(is_general_position(config({{0}, {1}, {1}})));
}

TEST(GeneralPosition, CollinearTripleFails) {
  EXPECT_FALSE(is_general_position(config({{0, 0}, {1, 1}, {2, 2}, {1, 0}})));
  EXPECT_TRUE(is_general_position(config({{0, 0}, {1, 0}, {0, 1}, {2, 3}})));
}

TEST(MomentCurve, DirectEvaluationAndPosition) {
  PointConfig x = moment_curve_points(2, {Rat(0), Rat(1), Rat(2)});
  EXPECT_EQ(x.pts[0], (std::vector<Rat>{Rat(0), Rat(0)}));
  EXPECT_EQ(x.pts[1], (std::vector<Rat>{Rat(1), Rat(1)}));
  EXPECT_EQ(x.pts[2], (std::vector<Rat>{Rat(2), Rat(4)}));
  EXPECT_THROW(moment_curve_points(2, {Rat(1), Rat(1)}), input_error);
  for (int d = 1; d <= 4; ++d) {
    std::vector<Rat> params;
    for (int t = -3; t <= 4; ++t) params.push_back(Rat(t));
    EXPECT_TRUE(is_general_position(moment_curve_points(d, params)));
  }
}

TEST(RadonCircuits, LineTriple) {
  std::vector<int> signs = radon_circuit_signs(config({{0}, {1}, {2}}), {1, 2, 3});
  EXPECT_EQ(signs, (std::vector<int>{1, -1, 1}));
}

TEST(Neighbourly, ConvexPentagonIsOneNeighbourly) {
  PointConfig pentagon = config({{0, 2}, {2, 1}, {1, -2}, {-1, -2}, {-2, 1}});
  EXPECT_TRUE(is_k_neighbourly(pentagon, 1));
}

TEST(Neighbourly, InteriorPointBreaksOneNeighbourliness) {
  PointConfig x = config({{0, 2}, {2, 1}, {1, -2}, {-1, -2}, {-2, 1}, {0, 0}});
  // relabel slightly to keep general position: shift the interior point
  x.pts.back() = {Rat(1, 7), Rat(1, 9)};
  ASSERT_TRUE(is_general_position(x));
  EXPECT_FALSE(is_k_neighbourly(x, 1));
}

TEST(Neighbourly, CyclicPolytopeIsHalfDimNeighbourly) {
  std::vector<Rat> params;
  for (int t = 1; t <= 8; ++t) params.push_back(Rat(t));
  PointConfig x = moment_curve_points(4, params);
  EXPECT_TRUE(is_k_neighbourly(x, 2));
}

TEST(ProjectiveMap, IdentityFixesPoints) {
  PointConfig x = config({{0, 0}, {1, 0}, {0, 1}});
  PointConfig y = apply_projective(ProjectiveMap::identity(2), x);
  EXPECT_EQ(x.pts, y.pts);
}

TEST(ProjectiveMap, RegularityAndPermissibility) {
  ProjectiveMap p = ProjectiveMap::identity(1);
  p.c = {Rat(1)};
  p.delta = Rat(-1);  // denominator x - 1 vanishes at x = 1
  PointConfig x = config({{0}, {1}});
  EXPECT_FALSE(p.permissible_for(x));
  EXPECT_THROW(apply_projective(p, x), input_error);
}

TEST(ProjectiveFromSigns, AllPlusGivesIdentityLikeMap) {
  PointConfig x = config({{0}, {1}, {2}});
  ProjectiveMap p = projective_from_signs(x, {1, 1, 1});
  EXPECT_EQ(p.c, (std::vector<Rat>{Rat(0)}));
  EXPECT_EQ(p.delta, Rat(1));
  EXPECT_TRUE(p.is_regular());
}

TEST(ProjectiveFromSigns, RealizablePatternOnTheLine) {
  PointConfig x = config({{0}, {1}, {2}});
  ProjectiveMap p = projective_from_signs(x, {-1, 1, 1});
  EXPECT_TRUE(p.is_regular());
  EXPECT_TRUE(p.permissible_for(x));
  EXPECT_LT(p.denominator(x.pts[0]), 0);
  EXPECT_GT(p.denominator(x.pts[1]), 0);
  EXPECT_GT(p.denominator(x.pts[2]), 0);
}

TEST(ProjectiveFromSigns, AlternatingPatternOnTheLineIsNotRealizable) {
  PointConfig x = config({{0}, {1}, {2}});
  EXPECT_THROW(projective_from_signs(x, {1, -1, 1}), not_realizable);
}

TEST(ProjectiveFromSigns, MapsAreAlwaysRegular) {
  // symmetric pattern around the origin tempts delta = 0; the result must
  // still be a regular map
  PointConfig x = config({{-3}, {-1}, {1}, {3}});
  ProjectiveMap p = projective_from_signs(x, {-1, -1, 1, 1});
  EXPECT_TRUE(p.is_regular());
  EXPECT_TRUE(p.permissible_for(x));
  EXPECT_LT(p.denominator(x.pts[1]), 0);
  EXPECT_GT(p.denominator(x.pts[2]), 0);
}

TEST(RandomConfig, DeterministicAndInPosition) {
  PointConfig a = random_general_position_config(7, 8, 2);
  PointConfig b = random_general_position_config(7, 8, 2);
  EXPECT_EQ(a.pts, b.pts);
  EXPECT_TRUE(is_general_position(a));
}

TEST(Perturb, DeterministicJitterWithinBound) {
  PointConfig x = config({{0, 0}, {1, 0}, {0, 1}});
  PointConfig y = perturb_config(x, 11, 1000);
  PointConfig z = perturb_config(x, 11, 1000);
  EXPECT_EQ(y.pts, z.pts);
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < 2; ++j) {
      Rat diff = y.pts[i][j] - x.pts[i][j];
      EXPECT_LE(abs(diff.get_num()) * 1, diff.get_den());  // |diff| <= 1/1000 <= 1
    }
}

}  // namespace
}  // namespace neighborly
