#include <gtest/gtest.h>

#include "tspread/io.hpp"

using namespace tspread;
using io::json;

TEST(CountJson, SmallAndLarge) {
  EXPECT_EQ(io::count_json(73), json(73));
  Count big = Count{1} << 70;
  json j = io::count_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(io::count_from_json(j), big);
  EXPECT_EQ(io::count_from_json(json(12)), 12u);
  EXPECT_THROW(io::count_from_json(json(-1)), DomainError);
  EXPECT_THROW(io::count_from_json(json("12a")), DomainError);
  EXPECT_THROW(io::count_from_json(json::array()), DomainError);
}

TEST(MonomialJson, RoundTrip) {
  Monomial u{4, 9, 13, 16};
  EXPECT_EQ(io::to_json(u).dump(), "[4,9,13,16]");
  EXPECT_EQ(io::monomial_from_json(io::to_json(u)), u);
  EXPECT_THROW(io::monomial_from_json(json::parse("[4,\"x\"]")), DomainError);
  EXPECT_THROW(io::monomial_from_json(json::parse("{}")), DomainError);
  EXPECT_THROW(io::monomial_from_json(json::parse("[9,4]")), DomainError);
}

TEST(IdealJson, RoundTrip) {
  TIdeal I = TIdeal::from_borel_generators(Ambient{13, 2}, {{1, 8}, {4, 6, 8, 10}});
  json j = io::to_json(I);
  EXPECT_EQ(j.at("n"), 13);
  EXPECT_TRUE(j.at("generators").contains("2"));
  EXPECT_EQ(io::ideal_from_json(j), I);
  EXPECT_EQ(io::ideal_from_json(json::parse(j.dump())), I);
}

TEST(IdealJson, Rejections) {
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"n":13})")), DomainError);
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"n":13,"t":2,"generators":{"x":[[1,3]]}})")), DomainError);
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"n":13,"t":2,"generators":{"2":[[1,2]]}})")), DomainError);
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"n":13,"t":2,"generators":{"3":[[1,3]]}})")), DomainError);
  // x_2x_8 without x_1x_8 is not strongly stable.
  EXPECT_THROW(io::ideal_from_json(json::parse(R"({"n":13,"t":2,"generators":{"2":[[2,8]]}})")), DomainError);
}

TEST(SpecJson, RoundTrip) {
  CornerSpec s{Ambient{25, 3}, {{6, 2, 2}, {5, 4, 1}}};
  json j = io::to_json(s);
  CornerSpec back = io::spec_from_json(j);
  EXPECT_EQ(back.amb, s.amb);
  EXPECT_EQ(back.corners, s.corners);
  EXPECT_THROW(io::spec_from_json(json::parse(R"({"n":13,"t":2})")), DomainError);
  EXPECT_THROW(io::spec_from_json(json::parse(R"({"n":13,"t":2,"corners":[{"k":1}]})")), DomainError);
}

TEST(ReportJson, Fields) {
  SolveReport r = construct_ideal(CornerSpec{Ambient{25, 3}, {{6, 2, 2}, {5, 4, 1}, {4, 5, 3}, {3, 7, 2}}});
  json j = io::to_json(r);
  EXPECT_EQ(j.at("verdict"), "feasible");
  EXPECT_EQ(j.at("audit").at(1).at("n"), 37);
  EXPECT_EQ(j.at("audit").at(3).at("p"), 82);
  EXPECT_EQ(j.at("audit").at(3).at("v"), json::parse("[4,7,10,13,16,19,22]"));
  EXPECT_TRUE(j.at("failure").is_null());
  EXPECT_EQ(io::ideal_from_json(j.at("ideal")), *r.ideal);

  SolveReport bad = construct_ideal(CornerSpec{Ambient{13, 2}, {{5, 2, 3}, {3, 4, 10}}});
  json jb = io::to_json(bad);
  EXPECT_EQ(jb.at("verdict"), "infeasible");
  EXPECT_EQ(jb.at("failure").at("corner"), 1);
  EXPECT_EQ(jb.at("failure").at("bound"), 1);
  EXPECT_TRUE(jb.at("ideal").is_null());
}

TEST(BettiJson, EntriesAndTotals) {
  TIdeal I = TIdeal::from_borel_generators(Ambient{10, 3}, {{1, 7}});
  json j = io::to_json(betti_table(I));
  EXPECT_EQ(j.at("total"), json::parse("[4,6,4,1]"));
  EXPECT_EQ(j.at("entries").size(), 4u);
  EXPECT_EQ(j.at("entries").at(0).at("value"), 4);
}

TEST(M2Export, CommaSeparated) {
  TIdeal I = TIdeal::from_borel_generators(Ambient{10, 3}, {{1, 5}});
  EXPECT_EQ(io::to_m2(I), "x_1*x_4, x_1*x_5");
}
