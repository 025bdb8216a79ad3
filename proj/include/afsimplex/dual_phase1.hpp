#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "afsimplex/dictionary.hpp"
#include "afsimplex/phase1_af.hpp"
#include "afsimplex/trace.hpp"

// Dual counterpart of the artificial-free phase 1: reach dual feasibility
// (objective row >= 0) without artificial constraints.
//
// The rule is the primal method read through negative_transpose(): a primal
// step on the transposed dictionary at (row m, column r) is a dual step on
// the original at (row r, column m). Written out on the original dictionary:
//   K  = { j : d(0,j) < 0 },  W'_i = sum_{k in K} d(i,k)
//   r  = argmax_i W'_i over W'_i > 0 (ties: smallest basic label)
//   m  = argmax_j d(0,j)/d(r,j) over (d(0,j) < 0, d(r,j) > 0) or
//                                    (d(0,j) >= 0, d(r,j) < 0)
// No row with W'_i > 0 means the dictionary is dual infeasible.

namespace afs {

enum class DualPhase1Verdict { pivot, already_dual_feasible, dual_infeasible };

template <Scalar T>
struct DualPhase1Decision {
  std::vector<std::size_t> infeasible_cols;  // K
  std::vector<T> w_prime;                    // W', one entry per basic row
  std::optional<std::size_t> leaving;        // row r
  std::optional<std::size_t> entering;       // column m
  std::optional<T> step;                     // -d(0,m)/d(r,m) >= 0
  DualPhase1Verdict verdict = DualPhase1Verdict::already_dual_feasible;
};

template <Scalar T>
std::vector<std::size_t> dual_infeasible_cols(const Dictionary<T>& D) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 1; j <= D.cols(); ++j) {
    if (D.sign(0, j) == Sign::negative) cols.push_back(j);
  }
  return cols;
}

template <Scalar T>
T dual_infeasibility_sum(const Dictionary<T>& D) {
  T s(0);
  for (std::size_t j : dual_infeasible_cols(D)) s -= D(0, j);
  return s;
}

template <Scalar T>
DualPhase1Decision<T> dual_phase1_step(const Dictionary<T>& D, const Phase1Options& opts = {}) {
  const Tolerance tol = D.tolerance();
  DualPhase1Decision<T> dec;
  dec.infeasible_cols = dual_infeasible_cols(D);
  dec.w_prime.assign(D.rows(), T(0));
  if (dec.infeasible_cols.empty()) {
    dec.verdict = DualPhase1Verdict::already_dual_feasible;
    return dec;
  }
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    for (std::size_t k : dec.infeasible_cols) dec.w_prime[i - 1] += D(i, k);
  }

  // Entering rule of the transposed problem, priced on -W'.
  std::vector<T> prices;
  prices.reserve(dec.w_prime.size());
  for (const auto& w : dec.w_prime) prices.push_back(T(-w));
  dec.leaving = detail::price_entering(opts.pricing, prices, D.basis(), tol);
  if (!dec.leaving) {
    dec.verdict = DualPhase1Verdict::dual_infeasible;
    return dec;
  }
  const std::size_t r = *dec.leaving;

  std::optional<detail::RatioCandidate<T>> best;
  for (std::size_t j = 1; j <= D.cols(); ++j) {
    const Sign c = D.sign(0, j);
    const Sign a = D.sign(r, j);
    const bool eligible = c == Sign::negative ? a == Sign::positive : a == Sign::negative;
    if (!eligible) continue;
    // Minimizing -d(0,j)/d(r,j) is the argmax of d(0,j)/d(r,j).
    T step = T(-D(0, j)) / D(r, j);
    if (step < T(0)) step = T(0);
    detail::RatioCandidate<T> cand{j, step, abs_value(D(r, j)), D.nonbasic(j).id};
    if (!best || detail::precedes(cand, *best, opts.tie)) best = std::move(cand);
  }
  if (!best) throw NoEligibleRow(r);
  dec.entering = best->index;
  dec.step = best->ratio;
  dec.verdict = DualPhase1Verdict::pivot;
  return dec;
}

template <Scalar T>
PhaseResult<T> run_dual_phase1(const Dictionary<T>& start, const Phase1Options& opts = {}) {
  Dictionary<T> D = start;
  Trace<T> trace;
  trace.method = Method::dual_artificial_free;
  trace.initial_corner = corner_point(D);
  detail::Safeguard guard(opts.limits, D.rows(), D.cols());
  guard.visit(D.basis_signature());

  for (;;) {
    auto dec = dual_phase1_step(D, opts);
    if (dec.verdict == DualPhase1Verdict::already_dual_feasible) {
      trace.status = RunStatus::dual_feasible;
      break;
    }
    if (dec.verdict == DualPhase1Verdict::dual_infeasible) {
      trace.status = RunStatus::dual_infeasible;
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
    rec.ratio = *dec.step;
    rec.degenerate = is_zero(rec.ratio, D.tolerance());
    rec.infeasibility_before = dual_infeasibility_sum(D);
    rec.pricing = std::move(dec.w_prime);

    D = pivot(D, r, m);

    rec.infeasibility_after = dual_infeasibility_sum(D);
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
