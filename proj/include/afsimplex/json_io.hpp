#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "afsimplex/scalar.hpp"
#include "afsimplex/solver.hpp"
#include "afsimplex/trace.hpp"

// JSON emission. Every number is an exact integer: rationals are written as
// num/den pairs, and keys come out in a fixed order so equal inputs produce
// byte-identical text.

namespace afs {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

}  // namespace detail

template <Scalar T>
Json rational_pair(const T& x) {
  const Rational q = to_rational(x);
  return Json::array({detail::integer_json(BigInt(numerator(q))),
                      detail::integer_json(BigInt(denominator(q)))});
}

template <Scalar T>
Json rational_object(const T& x) {
  const Rational q = to_rational(x);
  Json j;
  j["num"] = detail::integer_json(BigInt(numerator(q)));
  j["den"] = detail::integer_json(BigInt(denominator(q)));
  return j;
}

template <Scalar T>
Json point_json(const std::vector<T>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(rational_pair(x));
  return arr;
}

template <Scalar T>
Json trace_json(const Trace<T>& tr) {
  Json j;
  j["method"] = std::string(to_string(tr.method));
  j["status"] = std::string(to_string(tr.status));
  j["pivots"] = tr.pivot_count();
  j["degenerate_pivots"] = tr.degenerate_pivots;
  j["initial_corner"] = point_json(tr.initial_corner);
  Json entries = Json::array();
  for (const auto& p : tr.pivots) {
    Json e;
    e["iter"] = p.iteration;
    e["entering"] = p.entering.name;
    e["leaving"] = p.leaving.name;
    e["ratio"] = rational_pair(p.ratio);
    e["degenerate"] = p.degenerate;
    e["infeasibility_sum"] = rational_pair(p.infeasibility_after);
    e["infeasibility_sum_before"] = rational_pair(p.infeasibility_before);
    e["corner"] = point_json(p.corner);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  j["notes"] = tr.notes;
  return j;
}

template <Scalar T>
Json outcome_json(const SolveOutcome<T>& out) {
  Json j;
  j["status"] = std::string(to_string(out.status));
  j["objective"] = out.objective ? rational_object(*out.objective) : Json(nullptr);
  Json sol = Json::array();
  for (std::size_t k = 0; k < out.solution.size(); ++k) {
    Json s;
    s["var"] = k < out.variable_names.size() ? out.variable_names[k] : "x" + std::to_string(k + 1);
    const Rational q = to_rational(out.solution[k]);
    s["num"] = detail::integer_json(BigInt(numerator(q)));
    s["den"] = detail::integer_json(BigInt(denominator(q)));
    sol.push_back(std::move(s));
  }
  j["solution"] = std::move(sol);
  j["phase1"] = trace_json(out.phase1);
  j["phase2"] = out.phase2 ? trace_json(*out.phase2) : Json(nullptr);
  Json cert;
  cert["infeasible_rows"] = out.certificates.infeasible_rows;
  cert["ray"] = out.certificates.ray.empty() ? Json(nullptr) : point_json(out.certificates.ray);
  j["certificates"] = std::move(cert);
  return j;
}

template <Scalar T>
std::string emit_outcome_json(const SolveOutcome<T>& out) {
  return outcome_json(out).dump(2) + "\n";
}

template <Scalar T>
Json comparison_json(const ComparisonReport<T>& rep) {
  auto summary = [](const MethodSummary<T>& s) {
    Json j;
    j["verdict"] = std::string(to_string(s.verdict));
    j["pivots"] = s.pivots;
    j["degenerate_pivots"] = s.degenerate_pivots;
    Json corners = Json::array();
    for (const auto& c : s.corners) corners.push_back(point_json(c));
    j["corners"] = std::move(corners);
    j["trace"] = trace_json(s.trace);
    return j;
  };
  Json j;
  j["artificial_free"] = summary(rep.artificial_free);
  j["traditional"] = summary(rep.traditional);
  j["verdicts_equal"] = rep.verdicts_equal;
  j["corner_sequences_equal"] = rep.corner_sequences_equal;
  j["af_pivots_le_traditional"] = rep.af_pivots_le_traditional;
  return j;
}

template <Scalar T>
std::string emit_comparison_json(const ComparisonReport<T>& rep) {
  return comparison_json(rep).dump(2) + "\n";
}

}  // namespace afs
