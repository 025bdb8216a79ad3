#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "afsimplex/dictionary.hpp"
#include "afsimplex/errors.hpp"
#include "afsimplex/phase1_af.hpp"
#include "afsimplex/trace.hpp"

// Classical phase 1 with artificial variables, kept as a comparison oracle.
//
// Only rows with b_i < 0 receive an artificial v_i (A_i x + s_i - v_i = b_i);
// the other rows start with their slack basic. The phase-1 objective
// maximizes -sum(v), stored in the same convention as the objective row.
// Artificials that leave the basis are deleted. The original objective row
// rides along so the final dictionary is ready for phase 2.

namespace afs {

template <Scalar T>
struct AuxiliaryDictionary {
  Dictionary<T> tableau;     // objective row is the original objective
  std::vector<T> phase_row;  // phase-1 row: [0] constant, [j] nonbasic column j
  std::size_t structural_count = 0;
  std::size_t row_count = 0;

  bool is_artificial(const Label& l) const { return l.kind == LabelKind::artificial; }

  // Slack paired with an artificial on the same row (opposite sign).
  int conjugate_slack(int artificial_id) const {
    return artificial_id - static_cast<int>(row_count);
  }

  std::vector<std::size_t> artificial_rows() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= tableau.rows(); ++i) {
      if (is_artificial(tableau.basic(i))) out.push_back(i);
    }
    return out;
  }

  // Sum of basic artificial values.
  T infeasibility() const { return T(-phase_row[0]); }
};

// Negated sum of the basic artificial rows. Equal to phase_row at all times.
template <Scalar T>
std::vector<T> recomputed_phase_row(const AuxiliaryDictionary<T>& aux) {
  std::vector<T> row(aux.tableau.cols() + 1, T(0));
  for (std::size_t i : aux.artificial_rows()) {
    for (std::size_t j = 0; j <= aux.tableau.cols(); ++j) row[j] -= aux.tableau(i, j);
  }
  return row;
}

template <Scalar T>
AuxiliaryDictionary<T> build_auxiliary(const StandardProblem& sp, Tolerance tol = {}) {
  sp.validate();
  const std::size_t m = sp.rows();
  const std::size_t p = sp.cols();

  // Columns: structurals, then the slacks of negative-b rows in row order.
  std::vector<Label> nonbasis;
  for (std::size_t j = 0; j < p; ++j) {
    nonbasis.push_back(structural_label(
        j, sp.variable_names.empty() ? "x" + std::to_string(j + 1) : sp.variable_names[j]));
  }
  std::vector<std::size_t> slack_col(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (sp.b[i] < 0) {
      nonbasis.push_back(slack_label(p, i));
      slack_col[i] = nonbasis.size();
    }
  }
  const std::size_t n = nonbasis.size();

  std::vector<Label> basis;
  std::vector<T> d((m + 1) * (n + 1), T(0));
  auto at = [&](std::size_t i, std::size_t j) -> T& { return d[i * (n + 1) + j]; };
  for (std::size_t j = 0; j < p; ++j) at(0, j + 1) = from_rational<T>(Rational(-sp.c[j]));
  for (std::size_t i = 0; i < m; ++i) {
    const bool needs_artificial = sp.b[i] < 0;
    basis.push_back(needs_artificial ? artificial_label(p, m, i) : slack_label(p, i));
    // v_i = -b_i + A_i x + s_i  reads as  (-b_i; -A_i, -1)
    const Rational sign = needs_artificial ? Rational(-1) : Rational(1);
    at(i + 1, 0) = from_rational<T>(Rational(sign * sp.b[i]));
    for (std::size_t j = 0; j < p; ++j) at(i + 1, j + 1) = from_rational<T>(Rational(sign * sp.A[i][j]));
    if (needs_artificial) at(i + 1, slack_col[i]) = T(-1);
  }

  AuxiliaryDictionary<T> aux{Dictionary<T>(std::move(basis), std::move(nonbasis), std::move(d), tol),
                             {}, p, m};
  aux.phase_row = recomputed_phase_row(aux);
  return aux;
}

enum class TraditionalVerdict { pivot, feasible, infeasible };

template <Scalar T>
struct TraditionalDecision {
  TraditionalVerdict verdict = TraditionalVerdict::feasible;
  std::optional<std::size_t> entering;
  std::optional<std::size_t> leaving;
  std::optional<T> ratio;
  bool conjugate_exit = false;  // artificial replaced by its own slack
};

namespace detail {

template <Scalar T>
TraditionalDecision<T> conjugate_exit(const AuxiliaryDictionary<T>& aux, std::size_t row) {
  const auto& D = aux.tableau;
  auto col = D.col_of(aux.conjugate_slack(D.basic(row).id));
  if (!col) throw InvalidProblem("conjugate slack of a basic artificial is not nonbasic");
  TraditionalDecision<T> dec;
  dec.verdict = TraditionalVerdict::pivot;
  dec.entering = *col;
  dec.leaving = row;
  dec.ratio = T(0);
  dec.conjugate_exit = true;
  return dec;
}

}  // namespace detail

// One decision of the artificial-variable phase 1. With use_trick, a basic
// artificial at value zero is replaced by its conjugate slack before any
// pricing happens.
template <Scalar T>
TraditionalDecision<T> traditional_step(const AuxiliaryDictionary<T>& aux, bool use_trick,
                                        LeavingTieBreak tie = LeavingTieBreak::smallest_label) {
  const auto& D = aux.tableau;
  const Tolerance tol = D.tolerance();
  const auto art_rows = aux.artificial_rows();
  if (art_rows.empty()) return {TraditionalVerdict::feasible, {}, {}, {}, false};

  if (use_trick) {
    for (std::size_t i : art_rows) {
      if (is_zero(D.rhs(i), tol)) return detail::conjugate_exit(aux, i);
    }
  }

  std::vector<T> prices(aux.phase_row.begin() + 1, aux.phase_row.end());
  auto m = detail::dantzig_entering(prices, D.nonbasis(), tol);
  if (!m) {
    if (is_positive(aux.infeasibility(), tol)) {
      return {TraditionalVerdict::infeasible, {}, {}, {}, false};
    }
    // Optimal at zero with artificials still basic at zero: drive them out.
    return detail::conjugate_exit(aux, art_rows.front());
  }

  std::optional<detail::RatioCandidate<T>> best;
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.sign(i, *m) != Sign::positive) continue;
    T ratio = D.rhs(i) / D(i, *m);
    if (ratio < T(0)) ratio = T(0);
    detail::RatioCandidate<T> cand{i, ratio, abs_value(D(i, *m)), D.basic(i).id};
    if (!best || detail::precedes(cand, *best, tie)) best = std::move(cand);
  }
  // The phase-1 objective is bounded above by zero, so a row always qualifies.
  if (!best) throw NoEligibleRow(*m);

  TraditionalDecision<T> dec;
  dec.verdict = TraditionalVerdict::pivot;
  dec.entering = *m;
  dec.leaving = best->index;
  dec.ratio = best->ratio;
  return dec;
}

// Pivots both objective rows and deletes the leaving column if it belonged to
// an artificial.
template <Scalar T>
AuxiliaryDictionary<T> apply_pivot(const AuxiliaryDictionary<T>& aux, std::size_t r,
                                   std::size_t m) {
  const auto& D = aux.tableau;
  const T& p = D(r, m);
  std::vector<T> row(aux.phase_row.size());
  const T factor = aux.phase_row[m] / p;
  for (std::size_t j = 0; j < row.size(); ++j) {
    row[j] = (j == m) ? T(-factor) : T(aux.phase_row[j] - factor * D(r, j));
  }
  const bool drop = aux.is_artificial(D.basic(r));
  Dictionary<T> next = pivot(D, r, m);
  if (drop) {
    next = next.drop_column(m);
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(m));
  }
  return {std::move(next), std::move(row), aux.structural_count, aux.row_count};
}

struct TraditionalOptions {
  bool use_trick = false;
  LeavingTieBreak tie = LeavingTieBreak::smallest_label;
  Limits limits;
};

template <Scalar T>
struct TraditionalResult {
  Dictionary<T> dictionary;  // artificial-free when feasible
  RunStatus status;
  Trace<T> trace;
  T final_infeasibility;  // sum of artificials at termination
};

template <Scalar T>
TraditionalResult<T> run_traditional_phase1(const AuxiliaryDictionary<T>& start,
                                            const TraditionalOptions& opts = {}) {
  AuxiliaryDictionary<T> aux = start;
  Trace<T> trace;
  trace.method = Method::traditional;
  trace.initial_corner = corner_point(aux.tableau);
  detail::Safeguard guard(opts.limits, aux.tableau.rows(), aux.tableau.cols());
  guard.visit(aux.tableau.basis_signature());
  const Tolerance tol = aux.tableau.tolerance();

  for (;;) {
    auto dec = traditional_step(aux, opts.use_trick, opts.tie);
    if (dec.verdict == TraditionalVerdict::feasible) {
      trace.status = RunStatus::feasible;
      break;
    }
    if (dec.verdict == TraditionalVerdict::infeasible) {
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
    rec.entering = aux.tableau.nonbasic(m);
    rec.leaving = aux.tableau.basic(r);
    rec.row = r;
    rec.col = m;
    rec.ratio = *dec.ratio;
    rec.degenerate = is_zero(aux.tableau.rhs(r), tol);
    rec.infeasibility_before = aux.infeasibility();
    rec.pricing.assign(aux.phase_row.begin() + 1, aux.phase_row.end());

    aux = apply_pivot(aux, r, m);

    rec.infeasibility_after = aux.infeasibility();
    rec.corner = corner_point(aux.tableau);
    rec.basis_signature = aux.tableau.basis_signature();
    if (rec.degenerate) ++trace.degenerate_pivots;
    if (dec.conjugate_exit) {
      trace.notes.push_back("pivot " + std::to_string(rec.iteration) + ": " + rec.leaving.name +
                            " replaced by its conjugate slack");
    }
    const bool fresh = guard.visit(rec.basis_signature);
    trace.pivots.push_back(std::move(rec));
    if (!fresh) {
      trace.status = RunStatus::cycle_detected;
      trace.notes.push_back("basis repeated after pivot " + std::to_string(trace.pivots.size()));
      break;
    }
  }
  T final_infeasibility = aux.infeasibility();
  return {std::move(aux.tableau), trace.status, std::move(trace), std::move(final_infeasibility)};
}

}  // namespace afs
