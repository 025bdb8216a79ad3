#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "afsimplex/dictionary.hpp"
#include "afsimplex/errors.hpp"
#include "afsimplex/trace.hpp"

// Artificial-free phase 1.
//
// Starting from any dictionary, repeatedly price the nonbasic columns by the
// column sums W of the rows with negative right-hand side, enter the most
// negative one, and leave by a two-branch ratio test: infeasible rows qualify
// when their pivot-column entry is negative (the basic variable increases
// toward zero), feasible rows when it is positive (the basic variable
// decreases toward zero). Feasible rows therefore never turn infeasible, and
// the total infeasibility never grows. A zero-valued feasible row with a
// negative column entry is skipped, which is how the method saves the
// degenerate pivots an artificial-variable phase 1 performs.

namespace afs {

enum class Phase1Verdict { pivot, already_feasible, infeasible };

template <Scalar T>
struct Phase1Decision {
  std::vector<std::size_t> infeasible_rows;  // L, 1-based rows
  std::vector<T> w;                          // W, one entry per nonbasic column
  std::optional<std::size_t> entering;       // column m
  std::optional<std::size_t> leaving;        // row r
  std::optional<T> ratio;
  Phase1Verdict verdict = Phase1Verdict::already_feasible;
};

struct Phase1Options {
  LeavingTieBreak tie = LeavingTieBreak::smallest_label;
  PricingRule pricing = PricingRule::dantzig;
  Limits limits;
};

template <Scalar T>
struct PhaseResult {
  Dictionary<T> dictionary;
  RunStatus status;
  Trace<T> trace;
};

template <Scalar T>
std::vector<std::size_t> infeasible_rows(const Dictionary<T>& D) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.sign(i, 0) == Sign::negative) rows.push_back(i);
  }
  return rows;
}

template <Scalar T>
std::vector<T> phase1_objective_vector(const Dictionary<T>& D,
                                       const std::vector<std::size_t>& rows) {
  std::vector<T> w(D.cols(), T(0));
  for (std::size_t i : rows) {
    for (std::size_t j = 1; j <= D.cols(); ++j) w[j - 1] += D(i, j);
  }
  return w;
}

// Sum of -d(i,0) over the rows with negative right-hand side.
template <Scalar T>
T infeasibility_sum(const Dictionary<T>& D) {
  T phi(0);
  for (std::size_t i : infeasible_rows(D)) phi -= D.rhs(i);
  return phi;
}

// Column with the most negative W entry, or nullopt when none is negative
// (the dictionary then certifies primal infeasibility if L is non-empty).
template <Scalar T>
std::optional<std::size_t> select_entering(const std::vector<T>& w,
                                           const std::vector<Label>& nonbasis, Tolerance tol,
                                           PricingRule rule = PricingRule::dantzig) {
  return detail::price_entering(rule, w, nonbasis, tol);
}

template <Scalar T>
bool eligible_leaving_row(const Dictionary<T>& D, std::size_t i, std::size_t m) {
  const Sign b = D.sign(i, 0);
  const Sign a = D.sign(i, m);
  if (b == Sign::negative) return a == Sign::negative;
  return a == Sign::positive;
}

template <Scalar T>
std::size_t select_leaving(const Dictionary<T>& D, std::size_t m,
                           LeavingTieBreak tie = LeavingTieBreak::smallest_label) {
  std::optional<detail::RatioCandidate<T>> best;
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (!eligible_leaving_row(D, i, m)) continue;
    detail::RatioCandidate<T> cand{i, T(D.rhs(i) / D(i, m)), abs_value(D(i, m)), D.basic(i).id};
    // A zero-classified rhs in float mode can produce a tiny negative quotient.
    if (cand.ratio < T(0)) cand.ratio = T(0);
    if (!best || detail::precedes(cand, *best, tie)) best = std::move(cand);
  }
  if (!best) throw NoEligibleRow(m);
  return best->index;
}

template <Scalar T>
Phase1Decision<T> phase1_step(const Dictionary<T>& D, const Phase1Options& opts = {}) {
  Phase1Decision<T> dec;
  dec.infeasible_rows = infeasible_rows(D);
  if (dec.infeasible_rows.empty()) {
    dec.w.assign(D.cols(), T(0));
    dec.verdict = Phase1Verdict::already_feasible;
    return dec;
  }
  dec.w = phase1_objective_vector(D, dec.infeasible_rows);
  dec.entering = select_entering(dec.w, D.nonbasis(), D.tolerance(), opts.pricing);
  if (!dec.entering) {
    dec.verdict = Phase1Verdict::infeasible;
    return dec;
  }
  dec.leaving = select_leaving(D, *dec.entering, opts.tie);
  T ratio = D.rhs(*dec.leaving) / D(*dec.leaving, *dec.entering);
  dec.ratio = ratio < T(0) ? T(0) : ratio;
  dec.verdict = Phase1Verdict::pivot;
  return dec;
}

template <Scalar T>
PhaseResult<T> run_phase1(const Dictionary<T>& start, const Phase1Options& opts = {}) {
  Dictionary<T> D = start;
  Trace<T> trace;
  trace.method = Method::artificial_free;
  trace.initial_corner = corner_point(D);
  detail::Safeguard guard(opts.limits, D.rows(), D.cols());
  guard.visit(D.basis_signature());

  for (;;) {
    Phase1Decision<T> dec = phase1_step(D, opts);
    if (dec.verdict == Phase1Verdict::already_feasible) {
      trace.status = RunStatus::feasible;
      break;
    }
    if (dec.verdict == Phase1Verdict::infeasible) {
      trace.status = RunStatus::infeasible;
      break;
    }
    if (guard.exhausted(trace.pivots.size())) {
      trace.status = RunStatus::iteration_limit;
      trace.notes.push_back("iteration limit " + std::to_string(guard.cap()) + " reached");
      break;
    }
    const std::size_t r = *dec.leaving;
    const std::size_t m = *dec.entering;
    PivotRecord<T> rec;
    rec.iteration = trace.pivots.size() + 1;
    rec.entering = D.nonbasic(m);
    rec.leaving = D.basic(r);
    rec.row = r;
    rec.col = m;
    rec.ratio = *dec.ratio;
    rec.degenerate = is_zero(rec.ratio, D.tolerance());
    rec.infeasibility_before = infeasibility_sum(D);
    rec.pricing = std::move(dec.w);

    D = pivot(D, r, m);

    rec.infeasibility_after = infeasibility_sum(D);
    rec.corner = corner_point(D);
    rec.basis_signature = D.basis_signature();
    if (rec.degenerate) ++trace.degenerate_pivots;
    const bool fresh = guard.visit(rec.basis_signature);
    trace.pivots.push_back(std::move(rec));
    if (!fresh) {
      trace.status = RunStatus::cycle_detected;
      trace.notes.push_back("basis repeated after pivot " + std::to_string(trace.pivots.size()));
      break;
    }
  }
  return {std::move(D), trace.status, std::move(trace)};
}

}  // namespace afs
