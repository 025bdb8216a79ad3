#pragma once

#include <string>
#include <vector>

#include "afsimplex/afsimplex.hpp"

namespace afs::testing {

inline Rational Q(long long num, long long den = 1) { return Rational(num, den); }

inline std::vector<Rational> Qs(std::initializer_list<Rational> xs) { return xs; }

// max 3x1 + 5x2 with one <= row and four >= rows; the slack basis starts
// infeasible in four rows.
inline const char* kComparativeLp =
    "max: 3 x1 + 5 x2;\n"
    "c1: x1 <= 4;\n"
    "c2: x2 >= 6;\n"
    "c3: 3x1 + 2x2 >= 18;\n"
    "c4: x1 + x2 >= 8;\n"
    "c5: 5x1 + 4x2 >= 32;\n";

inline GeneralProblem comparative_general() {
  GeneralProblem gp;
  gp.set_objective(Sense::maximize, std::vector<std::pair<std::string, Rational>>{{"x1", Q(3)}, {"x2", Q(5)}});
  gp.add_constraint("c1", {{"x1", Q(1)}}, Relation::less_equal, Q(4));
  gp.add_constraint("c2", {{"x2", Q(1)}}, Relation::greater_equal, Q(6));
  gp.add_constraint("c3", {{"x1", Q(3)}, {"x2", Q(2)}}, Relation::greater_equal, Q(18));
  gp.add_constraint("c4", {{"x1", Q(1)}, {"x2", Q(1)}}, Relation::greater_equal, Q(8));
  gp.add_constraint("c5", {{"x1", Q(5)}, {"x2", Q(4)}}, Relation::greater_equal, Q(32));
  return gp;
}

inline StandardProblem comparative_problem() { return standardize(comparative_general()); }

// x1 <= 1 and x1 >= 2: empty region.
inline StandardProblem contradictory_problem() {
  return StandardProblem::from_rows({{Q(1)}, {Q(-1)}}, {Q(1), Q(-2)}, {Q(1)});
}

inline std::vector<Rational> W(const Dictionary<Rational>& D) {
  return phase1_objective_vector(D, infeasible_rows(D));
}

// Row index of the basic variable with the given name.
template <Scalar T>
std::size_t row_named(const Dictionary<T>& D, const std::string& name) {
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.basic(i).name == name) return i;
  }
  throw std::out_of_range("no basic variable " + name);
}

template <Scalar T>
std::size_t col_named(const Dictionary<T>& D, const std::string& name) {
  for (std::size_t j = 1; j <= D.cols(); ++j) {
    if (D.nonbasic(j).name == name) return j;
  }
  throw std::out_of_range("no nonbasic variable " + name);
}

// Seeded instance suite shared by the property tests.
inline std::vector<GeneratedLp> instance_suite(std::size_t count, std::uint64_t seed0,
                                               std::size_t max_rows = 6, std::size_t max_cols = 6) {
  std::vector<GeneratedLp> out;
  std::mt19937_64 rng(seed0);
  for (std::size_t k = 0; k < count; ++k) {
    GeneratorConfig cfg;
    cfg.seed = seed0 * 100003 + k;
    cfg.rows = 1 + rng() % max_rows;
    cfg.cols = 1 + rng() % max_cols;
    cfg.shape = static_cast<InstanceShape>(k % 3);
    out.push_back(generate_instance(cfg));
  }
  return out;
}

}  // namespace afs::testing
