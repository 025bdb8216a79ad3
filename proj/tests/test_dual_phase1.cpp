#include <gtest/gtest.h>

#include <random>

#include "afsimplex/dual_phase1.hpp"
#include "support/fixtures.hpp"

using namespace afs;
using afs::testing::Q;

namespace {

Dictionary<Rational> one_row_example() {
  return Dictionary<Rational>({{3, LabelKind::slack, "w1"}},
                              {{1, LabelKind::structural, "x1"}, {2, LabelKind::structural, "x2"}},
                              {Q(0), Q(-1), Q(2), Q(5), Q(1), Q(1)});
}

RunStatus mirrored(RunStatus s) {
  switch (s) {
    case RunStatus::feasible: return RunStatus::dual_feasible;
    case RunStatus::infeasible: return RunStatus::dual_infeasible;
    default: return s;
  }
}

}  // namespace

TEST(DualPhase1, AlreadyDualFeasible) {
  Dictionary<Rational> D({{2, LabelKind::slack, "w1"}}, {{1, LabelKind::structural, "x1"}},
                         {Q(0), Q(1), Q(-4), Q(2)});
  EXPECT_EQ(dual_phase1_step(D).verdict, DualPhase1Verdict::already_dual_feasible);
  const auto res = run_dual_phase1(D);
  EXPECT_EQ(res.status, RunStatus::dual_feasible);
  EXPECT_EQ(res.trace.pivot_count(), 0u);
}

TEST(DualPhase1, OneRowExample) {
  const auto D = one_row_example();
  const auto dec = dual_phase1_step(D);
  ASSERT_EQ(dec.verdict, DualPhase1Verdict::pivot);
  EXPECT_EQ(dec.infeasible_cols, (std::vector<std::size_t>{1}));
  EXPECT_EQ(dec.w_prime, (std::vector<Rational>{Q(1)}));
  EXPECT_EQ(*dec.leaving, 1u);
  EXPECT_EQ(*dec.entering, 1u);
  EXPECT_EQ(*dec.step, Q(1));

  const auto res = run_dual_phase1(D);
  ASSERT_EQ(res.status, RunStatus::dual_feasible);
  EXPECT_EQ(res.trace.pivot_count(), 1u);
  EXPECT_EQ(res.dictionary(0, 1), Q(1));
  EXPECT_EQ(res.dictionary(0, 2), Q(3));
  EXPECT_TRUE(classify(res.dictionary).dual_feasible);
}

TEST(DualPhase1, DualInfeasibleWhenNoRowHasPositiveWeight) {
  // Column x1 is dual infeasible and every row entry in it is nonpositive.
  Dictionary<Rational> D({{2, LabelKind::slack, "w1"}}, {{1, LabelKind::structural, "x1"}},
                         {Q(0), Q(-1), Q(3), Q(-2)});
  EXPECT_EQ(run_dual_phase1(D).status, RunStatus::dual_infeasible);
}

TEST(DualPhase1, MirrorsPrimalOnNegativeTranspose) {
  const auto D = one_row_example();
  const auto dual = dual_phase1_step(D);
  const auto primal = phase1_step(negative_transpose(D));
  EXPECT_EQ(*dual.leaving, *primal.entering);
  EXPECT_EQ(*dual.entering, *primal.leaving);
}

TEST(DualPhase1Property, MirrorOverRandomDictionaries) {
  std::mt19937_64 rng(17);
  std::size_t checked = 0;
  std::size_t pivots = 0;
  for (const auto& inst : afs::testing::instance_suite(220, 9)) {
    auto D = initial_dictionary<Rational>(standardize(inst.problem));
    // Scramble the starting basis a little.
    const int pre = static_cast<int>(rng() % 3);
    for (int k = 0; k < pre; ++k) {
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (std::size_t i = 1; i <= D.rows(); ++i)
        for (std::size_t j = 1; j <= D.cols(); ++j)
          if (D(i, j) != 0) cells.emplace_back(i, j);
      if (cells.empty()) break;
      const auto [r, m] = cells[rng() % cells.size()];
      D = pivot(D, r, m);
    }
    for (auto tie : {LeavingTieBreak::smallest_label, LeavingTieBreak::smallest_abs_pivot}) {
      Phase1Options o;
      o.tie = tie;
      const auto dual = run_dual_phase1(D, o);
      const auto primal = run_phase1(negative_transpose(D), o);
      ASSERT_EQ(dual.trace.pivot_count(), primal.trace.pivot_count());
      for (std::size_t k = 0; k < dual.trace.pivots.size(); ++k) {
        EXPECT_EQ(dual.trace.pivots[k].row, primal.trace.pivots[k].col);
        EXPECT_EQ(dual.trace.pivots[k].col, primal.trace.pivots[k].row);
        EXPECT_EQ(dual.trace.pivots[k].ratio, primal.trace.pivots[k].ratio);
      }
      EXPECT_EQ(dual.status, mirrored(primal.status));
      EXPECT_EQ(negative_transpose(dual.dictionary), primal.dictionary);
      pivots += dual.trace.pivot_count();
      ++checked;
    }
  }
  EXPECT_GE(checked, 400u);
  EXPECT_GT(pivots, 100u);
}
