#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "afsimplex/dictionary.hpp"
#include "afsimplex/errors.hpp"
#include "afsimplex/phase1_af.hpp"
#include "afsimplex/trace.hpp"

namespace afs {

enum class Phase2Verdict { pivot, optimal, unbounded };

template <Scalar T>
struct Phase2Decision {
  Phase2Verdict verdict = Phase2Verdict::optimal;
  std::optional<std::size_t> entering;  // also the certificate column when unbounded
  std::optional<std::size_t> leaving;
  std::optional<T> ratio;
};

// Primal simplex step with Dantzig pricing on the objective row.
template <Scalar T>
Phase2Decision<T> phase2_step(const Dictionary<T>& D,
                              LeavingTieBreak tie = LeavingTieBreak::smallest_label,
                              PricingRule pricing = PricingRule::dantzig) {
  const Tolerance tol = D.tolerance();
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.sign(i, 0) == Sign::negative) throw NotPrimalFeasible();
  }
  std::vector<T> prices = D.row(0);
  prices.erase(prices.begin());
  Phase2Decision<T> dec;
  dec.entering = detail::price_entering(pricing, prices, D.nonbasis(), tol);
  if (!dec.entering) {
    dec.verdict = Phase2Verdict::optimal;
    return dec;
  }
  const std::size_t m = *dec.entering;
  std::optional<detail::RatioCandidate<T>> best;
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.sign(i, m) != Sign::positive) continue;
    T ratio = D.rhs(i) / D(i, m);
    if (ratio < T(0)) ratio = T(0);
    detail::RatioCandidate<T> cand{i, ratio, abs_value(D(i, m)), D.basic(i).id};
    if (!best || detail::precedes(cand, *best, tie)) best = std::move(cand);
  }
  if (!best) {
    dec.verdict = Phase2Verdict::unbounded;
    return dec;
  }
  dec.verdict = Phase2Verdict::pivot;
  dec.leaving = best->index;
  dec.ratio = best->ratio;
  return dec;
}

// Direction in structural space obtained by raising nonbasic column m at unit
// rate: basic variables move by -d(i,m).
template <Scalar T>
std::vector<T> unbounded_ray(const Dictionary<T>& D, std::size_t m) {
  std::vector<std::pair<int, T>> xs;
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.basic(i).kind == LabelKind::structural) xs.emplace_back(D.basic(i).id, T(-D(i, m)));
  }
  for (std::size_t j = 1; j <= D.cols(); ++j) {
    if (D.nonbasic(j).kind == LabelKind::structural) {
      xs.emplace_back(D.nonbasic(j).id, j == m ? T(1) : T(0));
    }
  }
  std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<T> ray;
  for (auto& [id, v] : xs) ray.push_back(std::move(v));
  return ray;
}

struct Phase2Options {
  LeavingTieBreak tie = LeavingTieBreak::smallest_label;
  PricingRule pricing = PricingRule::dantzig;
  Limits limits;
};

template <Scalar T>
struct Phase2Result {
  Dictionary<T> dictionary;
  RunStatus status;
  Trace<T> trace;
  std::optional<std::size_t> unbounded_col;
  std::vector<T> ray;  // empty unless unbounded
};

template <Scalar T>
Phase2Result<T> run_phase2(const Dictionary<T>& start, const Phase2Options& opts = {}) {
  Dictionary<T> D = start;
  Trace<T> trace;
  trace.method = Method::primal_simplex;
  trace.initial_corner = corner_point(D);
  detail::Safeguard guard(opts.limits, D.rows(), D.cols());
  guard.visit(D.basis_signature());
  std::optional<std::size_t> unbounded_col;

  for (;;) {
    auto dec = phase2_step(D, opts.tie, opts.pricing);
    if (dec.verdict == Phase2Verdict::optimal) {
      trace.status = RunStatus::optimal;
      break;
    }
    if (dec.verdict == Phase2Verdict::unbounded) {
      trace.status = RunStatus::unbounded;
      unbounded_col = dec.entering;
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
    rec.infeasibility_before = T(0);
    rec.infeasibility_after = T(0);
    rec.pricing = D.row(0);
    rec.pricing.erase(rec.pricing.begin());

    D = pivot(D, r, m);

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
  std::vector<T> ray;
  if (unbounded_col) ray = unbounded_ray(D, *unbounded_col);
  return {std::move(D), trace.status, std::move(trace), unbounded_col, std::move(ray)};
}

}  // namespace afs
