#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "afsimplex/dictionary.hpp"
#include "afsimplex/scalar.hpp"

namespace afs {

enum class RunStatus {
  feasible,
  infeasible,
  optimal,
  unbounded,
  dual_feasible,
  dual_infeasible,
  cycle_detected,
  iteration_limit,
};

enum class Method {
  artificial_free,
  traditional,
  dual_artificial_free,
  primal_simplex,
};

// Tie-break among rows with the same minimum ratio.
enum class LeavingTieBreak {
  smallest_label,
  smallest_abs_pivot,
  largest_abs_pivot,
};

// Entering-variable pricing. Only Dantzig's largest-coefficient rule is
// provided; the enum is the extension point.
enum class PricingRule { dantzig };

// Safeguards shared by every pivoting loop.
struct Limits {
  std::optional<std::size_t> max_iterations;  // default 50 * (m + n)
  bool detect_cycles = true;

  std::size_t resolve(std::size_t rows, std::size_t cols) const {
    return max_iterations.value_or(50 * (rows + cols));
  }
};

template <Scalar T>
struct PivotRecord {
  std::size_t iteration = 0;
  Label entering;
  Label leaving;
  std::size_t row = 0;  // position in the dictionary before the pivot
  std::size_t col = 0;
  T ratio{};
  bool degenerate = false;
  T infeasibility_before{};
  T infeasibility_after{};
  std::vector<T> corner;  // structural basic solution after the pivot
  std::vector<int> basis_signature;
  std::vector<T> pricing;  // pricing vector used to pick the entering column
};

template <Scalar T>
struct Trace {
  Method method = Method::artificial_free;
  RunStatus status = RunStatus::feasible;
  std::vector<T> initial_corner;
  std::vector<PivotRecord<T>> pivots;
  std::size_t degenerate_pivots = 0;
  std::vector<std::string> notes;  // safeguard stops are explained here

  std::size_t pivot_count() const noexcept { return pivots.size(); }

  // Initial corner followed by the corner after each pivot.
  std::vector<std::vector<T>> corners() const {
    std::vector<std::vector<T>> out{initial_corner};
    for (const auto& p : pivots) out.push_back(p.corner);
    return out;
  }

  // Consecutive repeats collapsed, so stalling disappears.
  std::vector<std::vector<T>> distinct_corners() const {
    std::vector<std::vector<T>> out;
    for (auto& c : corners()) {
      if (out.empty() || out.back() != c) out.push_back(std::move(c));
    }
    return out;
  }
};

inline std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::feasible: return "feasible";
    case RunStatus::infeasible: return "infeasible";
    case RunStatus::optimal: return "optimal";
    case RunStatus::unbounded: return "unbounded";
    case RunStatus::dual_feasible: return "dual_feasible";
    case RunStatus::dual_infeasible: return "dual_infeasible";
    case RunStatus::cycle_detected: return "cycle_detected";
    case RunStatus::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::artificial_free: return "artificial_free";
    case Method::traditional: return "traditional";
    case Method::dual_artificial_free: return "dual_artificial_free";
    case Method::primal_simplex: return "primal_simplex";
  }
  return "unknown";
}

inline std::string_view to_string(LeavingTieBreak t) {
  switch (t) {
    case LeavingTieBreak::smallest_label: return "smallest-label";
    case LeavingTieBreak::smallest_abs_pivot: return "smallest-abs-pivot";
    case LeavingTieBreak::largest_abs_pivot: return "largest-abs-pivot";
  }
  return "unknown";
}

inline std::optional<LeavingTieBreak> parse_tie_break(std::string_view s) {
  if (s == "smallest-label") return LeavingTieBreak::smallest_label;
  if (s == "smallest-abs-pivot") return LeavingTieBreak::smallest_abs_pivot;
  if (s == "largest-abs-pivot") return LeavingTieBreak::largest_abs_pivot;
  return std::nullopt;
}

namespace detail {

template <Scalar T>
struct RatioCandidate {
  std::size_t index = 0;  // 1-based row (or column, for the dual rule)
  T ratio{};
  T pivot_abs{};
  int label = 0;
};

// True when a should be preferred over b. Ratios compare exactly; the
// tolerance only decides eligibility.
template <Scalar T>
bool precedes(const RatioCandidate<T>& a, const RatioCandidate<T>& b, LeavingTieBreak rule) {
  if (a.ratio != b.ratio) return a.ratio < b.ratio;
  switch (rule) {
    case LeavingTieBreak::smallest_label:
      break;
    case LeavingTieBreak::smallest_abs_pivot:
      if (a.pivot_abs != b.pivot_abs) return a.pivot_abs < b.pivot_abs;
      break;
    case LeavingTieBreak::largest_abs_pivot:
      if (a.pivot_abs != b.pivot_abs) return a.pivot_abs > b.pivot_abs;
      break;
  }
  return a.label < b.label;
}

// Most negative entry of prices, ties to the smallest label id. prices[k] is
// paired with labels[k]; the result is 1-based.
template <Scalar T>
std::optional<std::size_t> dantzig_entering(const std::vector<T>& prices,
                                            const std::vector<Label>& labels, Tolerance tol) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < prices.size(); ++k) {
    if (!is_negative(prices[k], tol)) continue;
    if (!best) {
      best = k;
      continue;
    }
    const T& cur = prices[*best];
    if (prices[k] < cur || (prices[k] == cur && labels[k].id < labels[*best].id)) best = k;
  }
  if (best) return *best + 1;
  return std::nullopt;
}

template <Scalar T>
std::optional<std::size_t> price_entering(PricingRule rule, const std::vector<T>& prices,
                                          const std::vector<Label>& labels, Tolerance tol) {
  switch (rule) {
    case PricingRule::dantzig:
      return dantzig_entering(prices, labels, tol);
  }
  return std::nullopt;
}

// Shared run bookkeeping: iteration cap and repeated-basis detection.
class Safeguard {
 public:
  Safeguard(const Limits& limits, std::size_t rows, std::size_t cols)
      : max_(limits.resolve(rows, cols)), detect_(limits.detect_cycles) {}

  bool exhausted(std::size_t done) const noexcept { return done >= max_; }
  std::size_t cap() const noexcept { return max_; }

  // Returns false when the signature was seen before.
  bool visit(const std::vector<int>& signature) {
    if (!detect_) return true;
    return seen_.insert(signature).second;
  }

 private:
  std::size_t max_;
  bool detect_;
  std::set<std::vector<int>> seen_;
};

}  // namespace detail
}  // namespace afs
