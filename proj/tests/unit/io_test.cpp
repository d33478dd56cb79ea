#include "neighborly/io.hpp"

#include <gtest/gtest.h>

#include "neighborly/travel.hpp"

namespace neighborly {
namespace {

TEST(Rationals, CanonicalTextForm) {
  EXPECT_EQ(rat_to_string(parse_rat("2/4")), "1/2");
  EXPECT_EQ(rat_to_string(parse_rat("-6/4")), "-3/2");
  EXPECT_EQ(rat_to_string(parse_rat("3/-9")), "-1/3");  // sign moves to the numerator
  EXPECT_EQ(rat_to_string(parse_rat("7")), "7");
  EXPECT_EQ(rat_to_string(parse_rat("0/5")), "0");
  EXPECT_THROW(parse_rat("1/0"), input_error);
  EXPECT_THROW(parse_rat("abc"), input_error);
  EXPECT_THROW(parse_rat(""), input_error);
}

TEST(PointsJson, RoundTripCanonicalizes) {
  Json j = Json::parse(R"([["1/2","-3"],["2/4","0"]])");
  PointConfig x = config_from_json(j);
  EXPECT_EQ(x.size(), 2);
  EXPECT_EQ(x.dim(), 2);
  EXPECT_EQ(x.pts[1][0], Rat(1, 2));
  Json back = config_to_json(x);
  EXPECT_EQ(back[0][0].get<std::string>(), "1/2");
  EXPECT_EQ(back[1][0].get<std::string>(), "1/2");  // canonical lowest terms
}

TEST(PointsJson, RejectsMalformedDocuments) {
  EXPECT_THROW(points_from_json(Json::parse("[]")), input_error);
  EXPECT_THROW(points_from_json(Json::parse(R"(["1"])")), input_error);
  EXPECT_THROW(points_from_json(Json::parse(R"([[1]])")), input_error);
  EXPECT_THROW(config_from_json(Json::parse(R"([["1"],["1","2"]])")), input_error);
}

TEST(TravelJson, KindAndBreakpoints) {
  Travel t = top_travel(parse_sign_matrix("+--\n+++"));
  Json j = travel_to_json(t);
  EXPECT_EQ(j.at("kind").get<std::string>(), "top");
  EXPECT_EQ(j.at("breakpoints").get<std::vector<int>>(), (std::vector<int>{2, 3}));
}

TEST(HyperplaneJson, RoundTrip) {
  Hyperplane h{{Rat(1, 3), Rat(-2)}, Rat(5, 7)};
  h.c[0].canonicalize();
  h.delta.canonicalize();
  Hyperplane back = hyperplane_from_json(hyperplane_to_json(h));
  EXPECT_EQ(back.c, h.c);
  EXPECT_EQ(back.delta, h.delta);
}

TEST(Files, MissingFileIsAnError) {
  EXPECT_THROW(read_json_file("/nonexistent/path.json"), input_error);
  EXPECT_THROW(read_text_file("/nonexistent/path.txt"), input_error);
}

}  // namespace
}  // namespace neighborly
