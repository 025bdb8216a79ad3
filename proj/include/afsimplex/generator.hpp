#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "afsimplex/problem.hpp"

// Seeded random instances for property runs.

namespace afs {

enum class InstanceShape { feasible_biased, infeasible_biased, degenerate_biased };

inline std::string_view to_string(InstanceShape s) {
  switch (s) {
    case InstanceShape::feasible_biased: return "feasible";
    case InstanceShape::infeasible_biased: return "infeasible";
    case InstanceShape::degenerate_biased: return "degenerate";
  }
  return "unknown";
}

inline std::optional<InstanceShape> parse_shape(std::string_view s) {
  if (s == "feasible") return InstanceShape::feasible_biased;
  if (s == "infeasible") return InstanceShape::infeasible_biased;
  if (s == "degenerate") return InstanceShape::degenerate_biased;
  return std::nullopt;
}

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t rows = 3;
  std::size_t cols = 2;
  int coeff_min = -9;
  int coeff_max = 9;
  InstanceShape shape = InstanceShape::feasible_biased;
};

struct GeneratedLp {
  GeneralProblem problem;
  // Point the constraints were planted around. Feasible for the feasible and
  // degenerate shapes; at least two rows are tight there in the degenerate one.
  std::vector<Rational> anchor;
};

inline GeneratedLp generate_instance(const GeneratorConfig& cfg) {
  if (cfg.rows == 0 || cfg.cols == 0) throw InvalidProblem("generator needs rows and cols >= 1");
  if (cfg.coeff_min > cfg.coeff_max) throw InvalidProblem("empty coefficient range");
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&](int percent) { return uniform(0, 99) < percent; };

  const std::size_t p = cfg.cols;
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < p; ++j) vars.push_back("x" + std::to_string(j + 1));

  GeneratedLp out;
  std::vector<int> anchor(p);
  for (auto& a : anchor) a = coin(30) ? 0 : uniform(0, 4);
  for (int a : anchor) out.anchor.emplace_back(a);

  auto random_row = [&]() {
    std::vector<int> a(p);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& v : a) {
        v = coin(20) ? 0 : uniform(cfg.coeff_min, cfg.coeff_max);
        nonzero = nonzero || v != 0;
      }
    }
    return a;
  };
  auto to_expr = [&](const std::vector<int>& a) {
    LinearExpr e;
    for (std::size_t j = 0; j < p; ++j) {
      if (a[j] != 0) e[vars[j]] = Rational(a[j]);
    }
    return e;
  };
  auto at_anchor = [&](const std::vector<int>& a) {
    long long v = 0;
    for (std::size_t j = 0; j < p; ++j) v += static_cast<long long>(a[j]) * anchor[j];
    return v;
  };

  std::vector<std::pair<std::string, Rational>> obj_terms;
  for (std::size_t j = 0; j < p; ++j) {
    obj_terms.emplace_back(vars[j], Rational(uniform(cfg.coeff_min, cfg.coeff_max)));
  }
  out.problem.set_objective(coin(50) ? Sense::maximize : Sense::minimize, obj_terms);

  std::size_t forced_tight = 0;
  if (cfg.shape == InstanceShape::degenerate_biased) forced_tight = std::min<std::size_t>(cfg.rows, 2);

  std::size_t k = 0;
  while (k < cfg.rows) {
    const std::string name = "c" + std::to_string(k + 1);
    std::vector<int> a = random_row();
    const long long v = at_anchor(a);
    switch (cfg.shape) {
      case InstanceShape::feasible_biased:
      case InstanceShape::degenerate_biased: {
        const bool tight = k < forced_tight || (cfg.shape == InstanceShape::degenerate_biased && coin(40));
        const long long gap = tight ? 0 : uniform(0, 6);
        const int pick = uniform(0, 9);
        if (pick == 0 && tight) {
          out.problem.add_constraint(name, to_expr(a), Relation::equal, Rational(v));
        } else if (pick < 5) {
          out.problem.add_constraint(name, to_expr(a), Relation::less_equal, Rational(v + gap));
        } else {
          out.problem.add_constraint(name, to_expr(a), Relation::greater_equal, Rational(v - gap));
        }
        ++k;
        break;
      }
      case InstanceShape::infeasible_biased: {
        if (k + 1 < cfg.rows && coin(50)) {
          // Contradictory pair on the same expression.
          const long long lo = uniform(-9, 9);
          out.problem.add_constraint(name, to_expr(a), Relation::less_equal, Rational(lo));
          out.problem.add_constraint("c" + std::to_string(k + 2), to_expr(a),
                                     Relation::greater_equal, Rational(lo + uniform(1, 5)));
          k += 2;
        } else {
          const Relation rel = coin(50) ? Relation::less_equal : Relation::greater_equal;
          out.problem.add_constraint(name, to_expr(a), rel, Rational(uniform(-20, 20)));
          ++k;
        }
        break;
      }
    }
  }
  return out;
}

inline GeneralProblem generate_lp(const GeneratorConfig& cfg) {
  return generate_instance(cfg).problem;
}

}  // namespace afs
