#include <gtest/gtest.h>

#include "afsimplex/afsimplex.hpp"
#include "afsimplex/json_io.hpp"
#include "support/fixtures.hpp"

using namespace afs;
using afs::testing::Q;

TEST(ParseLp, ComparativeExample) {
  const auto gp = parse_lp(afs::testing::kComparativeLp);
  EXPECT_EQ(gp, afs::testing::comparative_general());
  EXPECT_EQ(gp.variables(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(gp.constraints().size(), 5u);
  EXPECT_EQ(gp.constraints()[2].name, "c3");
}

TEST(ParseLp, RationalCoefficients) {
  const auto gp = parse_lp("min: 1/3 x + 0.5 y;\nx + 2/3 y >= 1;\n");
  EXPECT_EQ(gp.sense(), Sense::minimize);
  EXPECT_EQ(gp.objective_coefficient("x"), Q(1, 3));
  EXPECT_EQ(gp.objective_coefficient("y"), Q(1, 2));
  ASSERT_EQ(gp.constraints().size(), 1u);
  EXPECT_EQ(gp.constraints()[0].expr.at("y"), Q(2, 3));
  EXPECT_EQ(gp.constraints()[0].name, "R1");
}

TEST(ParseLp, CommentsSignsAndStars) {
  const auto gp = parse_lp("# header\nmax: -x1 + 2*x2; # trailing\nlim: -x1 - 3 x2 >= -6;\n");
  EXPECT_EQ(gp.objective_coefficient("x1"), Q(-1));
  const auto& c = gp.constraints()[0];
  EXPECT_EQ(c.expr.at("x2"), Q(-3));
  EXPECT_EQ(c.rhs, Q(-6));
  EXPECT_EQ(c.relation, Relation::greater_equal);
}

TEST(ParseLp, ErrorsCarryPositions) {
  try {
    parse_lp("max: x;\nc1: x <= ;\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_EQ(e.column, 10u);
  }
  EXPECT_THROW(parse_lp("max: ;\nx <= 1;\n"), ParseError);
  EXPECT_THROW(parse_lp("maximize: x;\nx <= 1;\n"), ParseError);
  EXPECT_THROW(parse_lp("max: x;\nx << 1;\n"), ParseError);
  EXPECT_THROW(parse_lp("max: x;\nx <= 1/0;\n"), ParseError);
  EXPECT_THROW(parse_lp("max: x;\nx <= 1\n"), ParseError);
  EXPECT_THROW(parse_lp("max: x;\nc: x <= 1;\nc: x <= 2;\n"), ParseError);
  EXPECT_THROW(parse_lp("max: x;\n"), EmptyProblem);
  EXPECT_THROW(parse_lp("max: x;\nx <= $;\n"), ParseError);
}

TEST(PrintLp, RoundTripsComparativeExample) {
  const auto gp = parse_lp(afs::testing::kComparativeLp);
  const std::string text = print_lp(gp);
  EXPECT_EQ(parse_lp(text), gp);
  EXPECT_EQ(print_lp(parse_lp(text)), text);
}

TEST(PrintLpProperty, RoundTripsGeneratedProblems) {
  std::size_t n = 0;
  for (const auto& inst : afs::testing::instance_suite(200, 51)) {
    const std::string text = print_lp(inst.problem);
    const auto back = parse_lp(text);
    EXPECT_EQ(back, inst.problem) << text;
    EXPECT_EQ(back.variables(), inst.problem.variables());
    ++n;
  }
  EXPECT_EQ(n, 200u);
}

TEST(Json, OutcomeIsDeterministicAndExact) {
  SolveConfig cfg;
  cfg.tie = LeavingTieBreak::smallest_abs_pivot;
  const auto sp = afs::testing::comparative_problem();
  const std::string a = emit_outcome_json(solve<Rational>(sp, cfg));
  const std::string b = emit_outcome_json(solve<Rational>(sp, cfg));
  EXPECT_EQ(a, b);

  const auto j = Json::parse(a);
  EXPECT_EQ(j["status"], "unbounded");
  EXPECT_TRUE(j["objective"].is_null());
  const auto& entries = j["phase1"]["entries"];
  ASSERT_EQ(entries.size(), 3u);
  std::vector<std::vector<std::int64_t>> corners;
  corners.push_back({j["phase1"]["initial_corner"][0][0], j["phase1"]["initial_corner"][1][0]});
  for (const auto& e : entries) corners.push_back({e["corner"][0][0], e["corner"][1][0]});
  EXPECT_EQ(corners, (std::vector<std::vector<std::int64_t>>{{0, 0}, {4, 0}, {4, 3}, {2, 6}}));
  EXPECT_EQ(entries[0]["ratio"], Json::array({4, 1}));
  EXPECT_EQ(entries[0]["infeasibility_sum_before"], Json::array({64, 1}));
  EXPECT_EQ(j["certificates"]["ray"], Json::parse("[[0,1],[1,2]]"));
}

TEST(Json, FractionsAreWrittenAsPairs) {
  EXPECT_EQ(rational_pair(Q(-2, 6)).dump(), "[-1,3]");
  EXPECT_EQ(rational_pair(0.75).dump(), "[3,4]");
  EXPECT_EQ(rational_object(Q(5)).dump(), "{\"num\":5,\"den\":1}");
}

TEST(Json, ComparisonReportIsDeterministic) {
  const auto sp = afs::testing::comparative_problem();
  const std::string a = emit_comparison_json(compare<Rational>(sp));
  EXPECT_EQ(a, emit_comparison_json(compare<Rational>(sp)));
  const auto j = Json::parse(a);
  EXPECT_EQ(j["traditional"]["degenerate_pivots"], 2);
  EXPECT_EQ(j["artificial_free"]["degenerate_pivots"], 0);
}
