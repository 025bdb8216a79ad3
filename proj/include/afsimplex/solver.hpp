#pragma once

#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afsimplex/dictionary.hpp"
#include "afsimplex/phase1_af.hpp"
#include "afsimplex/phase1_traditional.hpp"
#include "afsimplex/phase2.hpp"
#include "afsimplex/problem.hpp"
#include "afsimplex/trace.hpp"

namespace afs {

enum class Phase1Method { artificial_free, traditional };

enum class SolveStatus { optimal, unbounded, infeasible, cycle_detected, iteration_limit };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::cycle_detected: return "cycle_detected";
    case SolveStatus::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

struct SolveConfig {
  Phase1Method method = Phase1Method::artificial_free;
  LeavingTieBreak tie = LeavingTieBreak::smallest_label;
  bool use_trick = false;  // traditional method only
  Limits limits;
  Tolerance tol;
};

template <Scalar T>
struct Certificates {
  std::vector<std::string> infeasible_rows;  // rows with negative rhs at the infeasibility proof
  std::vector<T> ray;                        // improving feasible direction when unbounded
};

template <Scalar T>
struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<std::string> variable_names;
  std::vector<T> solution;   // structural values; empty when infeasible or stopped
  std::optional<T> objective;  // in the sense of the source problem
  Trace<T> phase1;
  std::optional<Trace<T>> phase2;
  Certificates<T> certificates;
};

namespace detail {

inline SolveStatus safeguard_status(RunStatus s) {
  return s == RunStatus::cycle_detected ? SolveStatus::cycle_detected
                                        : SolveStatus::iteration_limit;
}

template <Scalar T>
struct Phase1Run {
  Dictionary<T> dictionary;
  RunStatus status;
  Trace<T> trace;
};

template <Scalar T>
Phase1Run<T> run_selected_phase1(const StandardProblem& sp, const SolveConfig& cfg) {
  if (cfg.method == Phase1Method::artificial_free) {
    auto r = run_phase1(initial_dictionary<T>(sp, cfg.tol), Phase1Options{cfg.tie, PricingRule::dantzig, cfg.limits});
    return {std::move(r.dictionary), r.status, std::move(r.trace)};
  }
  auto r = run_traditional_phase1(build_auxiliary<T>(sp, cfg.tol),
                                  TraditionalOptions{cfg.use_trick, cfg.tie, cfg.limits});
  return {std::move(r.dictionary), r.status, std::move(r.trace)};
}

}  // namespace detail

// Two-phase solve: the selected phase 1, then the primal simplex if feasible.
template <Scalar T>
SolveOutcome<T> solve(const StandardProblem& sp, const SolveConfig& cfg = {}) {
  SolveOutcome<T> out;
  out.variable_names = sp.variable_names;
  auto p1 = detail::run_selected_phase1<T>(sp, cfg);
  out.phase1 = std::move(p1.trace);

  if (p1.status == RunStatus::infeasible) {
    out.status = SolveStatus::infeasible;
    // Rows whose negative right-hand side could not be repaired. For the
    // traditional method these are the rows of the remaining artificials.
    for (std::size_t i = 1; i <= p1.dictionary.rows(); ++i) {
      const Label& l = p1.dictionary.basic(i);
      const bool flagged = cfg.method == Phase1Method::artificial_free
                               ? p1.dictionary.sign(i, 0) == Sign::negative
                               : l.kind == LabelKind::artificial &&
                                     p1.dictionary.sign(i, 0) == Sign::positive;
      if (!flagged) continue;
      const std::size_t row = static_cast<std::size_t>(l.id) - sp.cols() -
                              (l.kind == LabelKind::artificial ? sp.rows() : 0) - 1;
      if (row < sp.rows()) out.certificates.infeasible_rows.push_back(sp.row_names.at(row));
    }
    return out;
  }
  if (p1.status != RunStatus::feasible) {
    out.status = detail::safeguard_status(p1.status);
    return out;
  }

  auto p2 = run_phase2(p1.dictionary, Phase2Options{cfg.tie, PricingRule::dantzig, cfg.limits});
  out.phase2 = std::move(p2.trace);
  switch (p2.status) {
    case RunStatus::optimal:
      out.status = SolveStatus::optimal;
      break;
    case RunStatus::unbounded:
      out.status = SolveStatus::unbounded;
      out.certificates.ray = std::move(p2.ray);
      break;
    default:
      out.status = detail::safeguard_status(p2.status);
      return out;
  }
  out.solution = corner_point(p2.dictionary);
  if (out.status == SolveStatus::optimal) {
    const T& z = p2.dictionary.objective_value();
    out.objective = sp.objective_negated ? T(-z) : z;
  }
  return out;
}

template <Scalar T>
struct MethodSummary {
  RunStatus verdict = RunStatus::feasible;
  std::size_t pivots = 0;
  std::size_t degenerate_pivots = 0;
  std::vector<std::vector<T>> corners;  // consecutive duplicates removed
  Trace<T> trace;
};

template <Scalar T>
struct ComparisonReport {
  MethodSummary<T> artificial_free;
  MethodSummary<T> traditional;
  bool verdicts_equal = false;
  bool corner_sequences_equal = false;
  bool af_pivots_le_traditional = false;
};

// Runs both phase 1 methods with the same pricing and tie-break.
template <Scalar T>
ComparisonReport<T> compare(const StandardProblem& sp, const SolveConfig& cfg = {}) {
  auto summarize = [](Trace<T> tr) {
    MethodSummary<T> s;
    s.verdict = tr.status;
    s.pivots = tr.pivot_count();
    s.degenerate_pivots = tr.degenerate_pivots;
    s.corners = tr.distinct_corners();
    s.trace = std::move(tr);
    return s;
  };
  SolveConfig af_cfg = cfg;
  af_cfg.method = Phase1Method::artificial_free;
  SolveConfig trad_cfg = cfg;
  trad_cfg.method = Phase1Method::traditional;

  auto trad_future = std::async(std::launch::async, [&] {
    return detail::run_selected_phase1<T>(sp, trad_cfg).trace;
  });
  ComparisonReport<T> rep;
  rep.artificial_free = summarize(detail::run_selected_phase1<T>(sp, af_cfg).trace);
  rep.traditional = summarize(trad_future.get());
  rep.verdicts_equal = rep.artificial_free.verdict == rep.traditional.verdict;
  rep.corner_sequences_equal = rep.artificial_free.corners == rep.traditional.corners;
  rep.af_pivots_le_traditional = rep.artificial_free.pivots <= rep.traditional.pivots;
  return rep;
}

}  // namespace afs
