#include "neighborly/certificate.hpp"

#include <gtest/gtest.h>

#include "neighborly/replay.hpp"
#include "neighborly/verify.hpp"

namespace neighborly {
namespace {

PointConfig line4() {
  PointConfig x;
  for (long v : {0, 1, 2, 3}) x.pts.push_back({Rat(v)});
  return x;
}

TEST(Certificates, EnvelopeAndDeterminism) {
  RunOptions opts;
  Certificate a = run_prop_llom(2, 3, opts);
  Certificate b = run_prop_llom(2, 3, opts);
  EXPECT_TRUE(a.verified());
  EXPECT_EQ(a.checked(), 64u);
  EXPECT_EQ(a.total(), 64u);
  a.set_runtime_ms(1);
  b.set_runtime_ms(999);
  EXPECT_EQ(a.comparable_text(), b.comparable_text());
  EXPECT_NE(a.to_text(), b.to_text());
  Certificate parsed = Certificate::from_json(Json::parse(a.to_text()));
  EXPECT_EQ(parsed.claim(), "prop-llom");
}

TEST(Certificates, SchemaValidation) {
  EXPECT_THROW(Certificate::from_json(Json{{"schema", "v0"}}), input_error);
  EXPECT_THROW(Certificate::from_json(Json{{"schema", "v1"}}), input_error);
}

TEST(Replay, PropLlomRoundTripAndTamper) {
  Certificate c = run_prop_llom(2, 4, RunOptions{});
  EXPECT_TRUE(replay(c));
  Certificate tampered = c;
  tampered.doc["witness"]["cyclic"] = c.witness().at("cyclic").get<std::uint64_t>() + 1;
  EXPECT_FALSE(replay(tampered));
}

TEST(Replay, PropLlomSampledMode) {
  RunOptions opts;
  opts.mode = "sampled";
  opts.sample_count = 500;
  opts.seed = 42;
  Certificate c = run_prop_llom(3, 4, opts);
  EXPECT_TRUE(c.verified());
  EXPECT_EQ(c.total(), 500u);
  EXPECT_TRUE(replay(c));
  Certificate tampered = c;
  tampered.doc["seed"] = 43;  // instance-level tamper changes the sample stream
  EXPECT_FALSE(replay(tampered));
}

TEST(Replay, PropPtRoundTrip) {
  Certificate c = run_prop_pt(2, 3, RunOptions{});
  EXPECT_TRUE(c.verified());
  EXPECT_TRUE(replay(c));
}

TEST(Replay, FamilyRoundTripAndTampers) {
  Certificate c = run_family_verify(FamilyParams{3, 2, 0}, RunOptions{});
  EXPECT_TRUE(c.verified());
  EXPECT_EQ(c.witness().at("shapes").size(), 5u);
  EXPECT_EQ(c.witness().at("max_s").get<int>(), 2);
  EXPECT_TRUE(replay(c));

  Certificate drop_case = c;
  drop_case.doc["witness"]["cases"].erase(0);
  EXPECT_FALSE(replay(drop_case));

  Certificate bump_ordinal = c;
  bump_ordinal.doc["witness"]["cases"][0][0] =
      c.witness().at("cases").at(0).at(0).get<std::uint64_t>() + 1;
  EXPECT_FALSE(replay(bump_ordinal));

  Certificate wrong_count = c;
  wrong_count.doc["witness"]["acyclic"] = 1;
  EXPECT_FALSE(replay(wrong_count));
}

TEST(Replay, FamilySampledRoundTrip) {
  RunOptions opts;
  opts.mode = "sampled";
  opts.sample_count = 300;
  opts.seed = 7;
  Certificate c = run_family_verify(FamilyParams{5, 2, 0}, opts);
  EXPECT_TRUE(c.verified());
  EXPECT_TRUE(replay(c));
}

TEST(Replay, DivideObstructionRoundTripAndPlaneTamper) {
  Certificate c = run_divide(line4(), 1);
  EXPECT_FALSE(c.verified());  // the four collinear points are not 1-divisible
  EXPECT_TRUE(replay(c));
  // refutation[1] is the partition {0,1} vs {2,3}; both sides survive its
  // removal, so the plane's slope is nonzero and flipping its sign breaks
  // strict separation
  Certificate tampered = c;
  std::string coeff =
      tampered.doc["witness"]["refutations"][1]["plane"]["c"][0].get<std::string>();
  ASSERT_NE(coeff, "0");
  tampered.doc["witness"]["refutations"][1]["plane"]["c"][0] =
      coeff.front() == '-' ? coeff.substr(1) : "-" + coeff;
  EXPECT_FALSE(replay(tampered));
  // changing a recorded removal set never matches the recomputed one
  Certificate moved = c;
  moved.doc["witness"]["refutations"][0]["removed"][0] = 2;
  EXPECT_FALSE(replay(moved));
}

TEST(Replay, DivideWitnessRoundTrip) {
  PointConfig x = random_general_position_config(19, 7, 2);
  Certificate c = run_divide(x, 1);
  EXPECT_TRUE(c.verified());
  EXPECT_TRUE(replay(c));
  Certificate tampered = c;
  // duplicate a label so the witness stops being a partition of the labels
  tampered.doc["witness"]["partition_a"][0] = c.witness().at("partition_a").at(1).get<int>();
  EXPECT_FALSE(replay(tampered));
}

TEST(Replay, GaleAndTravelAndBounds) {
  PointConfig x = random_general_position_config(23, 6, 2);
  Certificate g = run_gale(x);
  EXPECT_TRUE(g.verified());
  EXPECT_TRUE(replay(g));
  Certificate tampered = g;
  std::string v = tampered.doc["witness"]["diagram"][0][0].get<std::string>();
  tampered.doc["witness"]["diagram"][0][0] = v.front() == '-' ? v.substr(1) : "-" + v;
  EXPECT_FALSE(replay(tampered));

  Certificate t = run_travel(SignMatrix::constant(2, 3), "plain");
  EXPECT_TRUE(replay(t));

  Json table{{"lambda", Json::array({Json{{"d", 1}, {"k", 1}, {"lower", 5}, {"upper", 5}},
                                     Json{{"d", 2}, {"k", 1}, {"lower", 7}, {"upper", 7}},
                                     Json{{"d", 3}, {"k", 1}, {"lower", 9}, {"upper", 9}}})}};
  Certificate b = run_bounds(table);
  EXPECT_TRUE(b.verified());
  EXPECT_TRUE(replay(b));
}

TEST(Replay, SignFlipAndProjective) {
  PointConfig x = random_general_position_config(31, 5, 2);
  Certificate s = run_signflip(x, 1);
  EXPECT_TRUE(replay(s));
  if (s.verified()) {
    Certificate tampered = s;
    tampered.doc["witness"]["e"][1] = -tampered.doc["witness"]["e"][1].get<int>();
    EXPECT_FALSE(replay(tampered));
  }

  PointConfig line;
  for (long v : {0, 1, 2}) line.pts.push_back({Rat(v)});
  Certificate p = run_projective(line, {-1, 1, 1});
  EXPECT_TRUE(p.verified());
  EXPECT_TRUE(replay(p));
  Certificate tampered = p;
  std::string d = tampered.doc["witness"]["delta"].get<std::string>();
  tampered.doc["witness"]["delta"] = d.front() == '-' ? d.substr(1) : "-" + d;
  EXPECT_FALSE(replay(tampered));
}

TEST(Replay, UnknownClaimIsAnError) {
  Certificate c = Certificate::make("nonsense", Json::object(), Json::object(), true, 1, 1);
  EXPECT_THROW(replay(c), input_error);
}

}  // namespace
}  // namespace neighborly
