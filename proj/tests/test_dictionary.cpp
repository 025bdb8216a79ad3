#include <gtest/gtest.h>

#include <random>

#include "afsimplex/dictionary.hpp"
#include "support/fixtures.hpp"

using namespace afs;
using afs::testing::col_named;
using afs::testing::Q;
using afs::testing::row_named;

namespace {

Dictionary<Rational> comparative_initial() {
  return initial_dictionary<Rational>(afs::testing::comparative_problem());
}

// Second dictionary of the worked example: x1 entered, w1 left.
Dictionary<Rational> comparative_second() { return pivot(comparative_initial(), 1, 1); }

Dictionary<Rational> comparative_third() {
  const auto D = comparative_second();
  return pivot(D, row_named(D, "w3"), col_named(D, "x2"));
}

std::vector<Rational> entries_of_row(const Dictionary<Rational>& D, std::size_t i) { return D.row(i); }

}  // namespace

TEST(InitialDictionary, ComparativeExample) {
  const auto D = comparative_initial();
  ASSERT_EQ(D.rows(), 5u);
  ASSERT_EQ(D.cols(), 2u);
  EXPECT_EQ(entries_of_row(D, 0), (std::vector<Rational>{Q(0), Q(-3), Q(-5)}));
  std::vector<Rational> rhs;
  for (std::size_t i = 1; i <= 5; ++i) rhs.push_back(D.rhs(i));
  EXPECT_EQ(rhs, (std::vector<Rational>{Q(4), Q(-6), Q(-18), Q(-8), Q(-32)}));
  EXPECT_EQ(D.basic(1).name, "w1");
  EXPECT_EQ(D.basic(1).kind, LabelKind::slack);
  EXPECT_EQ(D.basic(1).id, 3);
  EXPECT_EQ(D.nonbasic(1).name, "x1");
  EXPECT_EQ(D.nonbasic(2).id, 2);
}

TEST(InitialDictionary, SingleRow) {
  const auto sp = StandardProblem::from_rows({{Q(1)}}, {Q(1)}, {Q(1)});
  const auto D = initial_dictionary<Rational>(sp);
  EXPECT_EQ(D.rows(), 1u);
  EXPECT_EQ(D.rhs(1), Q(1));
  EXPECT_EQ(D(0, 1), Q(-1));
  EXPECT_TRUE(classify(D).primal_feasible);
}

TEST(Pivot, FirstComparativePivot) {
  const auto D = comparative_second();
  EXPECT_EQ(D.basic(1).name, "x1");
  EXPECT_EQ(D.nonbasic(1).name, "w1");
  EXPECT_EQ(entries_of_row(D, 0), (std::vector<Rational>{Q(12), Q(3), Q(-5)}));
  EXPECT_EQ(entries_of_row(D, 1), (std::vector<Rational>{Q(4), Q(1), Q(0)}));
  EXPECT_EQ(entries_of_row(D, 2), (std::vector<Rational>{Q(-6), Q(0), Q(-1)}));
  EXPECT_EQ(entries_of_row(D, 3), (std::vector<Rational>{Q(-6), Q(3), Q(-2)}));
  EXPECT_EQ(entries_of_row(D, 4), (std::vector<Rational>{Q(-4), Q(1), Q(-1)}));
  EXPECT_EQ(entries_of_row(D, 5), (std::vector<Rational>{Q(-12), Q(5), Q(-4)}));
}

TEST(Pivot, SecondComparativePivot) {
  const auto D = comparative_third();
  // Objective row by substitution: z = 27 + 9/2 w1 + 5/2 w3.
  EXPECT_EQ(entries_of_row(D, 0), (std::vector<Rational>{Q(27), Q(-9, 2), Q(-5, 2)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "x2")), (std::vector<Rational>{Q(3), Q(-3, 2), Q(-1, 2)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "w2")), (std::vector<Rational>{Q(-3), Q(-3, 2), Q(-1, 2)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "w4")), (std::vector<Rational>{Q(-1), Q(-1, 2), Q(-1, 2)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "w5")), (std::vector<Rational>{Q(0), Q(-1), Q(-2)}));
}

TEST(Pivot, ThirdComparativePivotMatchesFinalDictionary) {
  const auto D3 = comparative_third();
  const auto D = pivot(D3, row_named(D3, "w4"), col_named(D3, "w1"));
  EXPECT_EQ(entries_of_row(D, 0), (std::vector<Rational>{Q(36), Q(-9), Q(2)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "x1")), (std::vector<Rational>{Q(2), Q(2), Q(-1)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "w2")), (std::vector<Rational>{Q(0), Q(-3), Q(1)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "x2")), (std::vector<Rational>{Q(6), Q(-3), Q(1)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "w1")), (std::vector<Rational>{Q(2), Q(-2), Q(1)}));
  EXPECT_EQ(entries_of_row(D, row_named(D, "w5")), (std::vector<Rational>{Q(2), Q(-2), Q(-1)}));
}

TEST(Pivot, ZeroPivotThrows) {
  const auto D = comparative_initial();
  // Row w2 has a zero in the x1 column.
  EXPECT_THROW(pivot(D, 2, 1), ZeroPivot);
  EXPECT_THROW(pivot(D, 0, 1), InvalidProblem);
  EXPECT_THROW(pivot(D, 1, 3), InvalidProblem);
}

TEST(Pivot, PivotBackRestoresExactly) {
  const auto D = comparative_initial();
  const auto once = pivot(D, 3, 2);
  const auto twice = pivot(once, 3, 2);
  EXPECT_EQ(twice, D);
}

TEST(Classify, FinalComparativeDictionary) {
  const auto D3 = comparative_third();
  const auto D = pivot(D3, row_named(D3, "w4"), col_named(D3, "w1"));
  const auto st = classify(D);
  EXPECT_TRUE(st.primal_feasible);
  EXPECT_FALSE(st.dual_feasible);
  EXPECT_FALSE(st.inconsistent_row);
}

TEST(Classify, InconsistentRow) {
  std::vector<Label> basis{{3, LabelKind::slack, "w1"}};
  std::vector<Label> nonbasis{{1, LabelKind::structural, "a"},
                              {2, LabelKind::structural, "b"},
                              {4, LabelKind::structural, "c"}};
  Dictionary<Rational> D(basis, nonbasis, {Q(0), Q(1), Q(1), Q(1), Q(-1), Q(2), Q(0), Q(3)});
  const auto st = classify(D);
  EXPECT_FALSE(st.primal_feasible);
  ASSERT_TRUE(st.inconsistent_row);
  EXPECT_EQ(*st.inconsistent_row, 1u);
}

TEST(Classify, UnboundedColumn) {
  std::vector<Label> basis{{2, LabelKind::slack, "w1"}, {3, LabelKind::slack, "w2"}, {4, LabelKind::slack, "w3"}};
  std::vector<Label> nonbasis{{1, LabelKind::structural, "x1"}};
  Dictionary<Rational> D(basis, nonbasis, {Q(0), Q(-5), Q(1), Q(-1), Q(1), Q(0), Q(1), Q(-2)});
  const auto st = classify(D);
  EXPECT_TRUE(st.primal_feasible);
  EXPECT_FALSE(st.dual_feasible);
  ASSERT_TRUE(st.unbounded_col);
  EXPECT_EQ(*st.unbounded_col, 1u);
}

TEST(Classify, SmallestWitnessIsReported) {
  std::vector<Label> basis{{3, LabelKind::slack, "w1"}, {4, LabelKind::slack, "w2"}};
  std::vector<Label> nonbasis{{1, LabelKind::structural, "x1"}, {2, LabelKind::structural, "x2"}};
  // Both rows inconsistent, both columns unbounded.
  Dictionary<Rational> D(basis, nonbasis, {Q(0), Q(-1), Q(-1), Q(-1), Q(0), Q(0), Q(-2), Q(0), Q(0)});
  const auto st = classify(D);
  EXPECT_EQ(st.inconsistent_row, 1u);
  EXPECT_EQ(st.unbounded_col, 1u);
}

TEST(BasicSolution, ReadsRightHandSide) {
  const auto second = basic_solution(comparative_second());
  EXPECT_EQ(second.value(1), Q(4));
  EXPECT_EQ(second.value(2), Q(0));
  EXPECT_EQ(second.objective, Q(12));

  const auto initial = basic_solution(comparative_initial());
  EXPECT_EQ(initial.value(1), Q(0));
  EXPECT_EQ(initial.value(2), Q(0));
  EXPECT_EQ(initial.objective, Q(0));

  const auto D3 = comparative_third();
  const auto fin = basic_solution(pivot(D3, row_named(D3, "w4"), col_named(D3, "w1")));
  EXPECT_EQ(fin.value(1), Q(2));
  EXPECT_EQ(fin.value(2), Q(6));
  EXPECT_EQ(fin.objective, Q(36));
}

TEST(NegativeTranspose, SingleEntry) {
  Dictionary<Rational> D({{2, LabelKind::slack, "w1"}}, {{1, LabelKind::structural, "x1"}},
                         {Q(7), Q(3), Q(-2), Q(4)});
  const auto T = negative_transpose(D);
  EXPECT_EQ(T.rhs(1), Q(3));
  EXPECT_EQ(T(0, 1), Q(-2));
  EXPECT_EQ(T(1, 1), Q(-4));
  EXPECT_EQ(T(0, 0), Q(-7));
  EXPECT_EQ(T.basic(1).name, "x1");
  EXPECT_EQ(T.nonbasic(1).name, "w1");
}

TEST(NegativeTranspose, SwapsFeasibilityFlagsAndIsAnInvolution) {
  const auto D3 = comparative_third();
  const auto D = pivot(D3, row_named(D3, "w4"), col_named(D3, "w1"));
  const auto T = negative_transpose(D);
  EXPECT_FALSE(classify(T).primal_feasible);
  EXPECT_TRUE(classify(T).dual_feasible);
  EXPECT_EQ(negative_transpose(T), D);
}

// Random small problems: involution of pivot, semantic preservation, the
// initial-feasibility characterization and the transpose flag swap.
TEST(DictionaryProperty, RandomPivots) {
  std::mt19937_64 rng(11);
  int pivots_checked = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    GeneratorConfig cfg{seed, 1 + seed % 4, 1 + seed % 3, -6, 6, static_cast<InstanceShape>(seed % 3)};
    const auto sp = standardize(generate_lp(cfg));
    auto D = initial_dictionary<Rational>(sp);

    bool b_nonneg = std::all_of(sp.b.begin(), sp.b.end(), [](const Rational& v) { return v >= 0; });
    EXPECT_EQ(classify(D).primal_feasible, b_nonneg);

    for (int step = 0; step < 4; ++step) {
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (std::size_t i = 1; i <= D.rows(); ++i) {
        for (std::size_t j = 1; j <= D.cols(); ++j) {
          if (D(i, j) != 0) cells.emplace_back(i, j);
        }
      }
      if (cells.empty()) break;
      const auto [r, m] = cells[rng() % cells.size()];
      const auto next = pivot(D, r, m);
      EXPECT_EQ(pivot(next, r, m), D);

      // Same point in the original variables: pick nonnegative values for
      // D's nonbasics, evaluate everything through D, then through next.
      std::vector<Rational> full(sp.cols() + sp.rows() + 1, Rational(0));
      for (std::size_t j = 1; j <= D.cols(); ++j) full[D.nonbasic(j).id] = Rational(static_cast<long long>(rng() % 5), 1 + static_cast<long long>(rng() % 3));
      for (std::size_t i = 1; i <= D.rows(); ++i) {
        Rational v = D.rhs(i);
        for (std::size_t j = 1; j <= D.cols(); ++j) v -= D(i, j) * full[D.nonbasic(j).id];
        full[D.basic(i).id] = v;
      }
      for (std::size_t i = 1; i <= next.rows(); ++i) {
        Rational v = next.rhs(i);
        for (std::size_t j = 1; j <= next.cols(); ++j) v -= next(i, j) * full[next.nonbasic(j).id];
        EXPECT_EQ(v, full[next.basic(i).id]);
      }
      // The slack values agree with the original rows.
      for (std::size_t i = 0; i < sp.rows(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < sp.cols(); ++j) lhs += sp.A[i][j] * full[j + 1];
        EXPECT_EQ(lhs + full[sp.cols() + i + 1], sp.b[i]);
      }

      const auto st = classify(next);
      const auto tst = classify(negative_transpose(next));
      EXPECT_EQ(st.primal_feasible, tst.dual_feasible);
      EXPECT_EQ(st.dual_feasible, tst.primal_feasible);
      D = next;
      ++pivots_checked;
    }
  }
  EXPECT_GT(pivots_checked, 150);
}
