#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afsimplex/errors.hpp"
#include "afsimplex/problem.hpp"
#include "afsimplex/scalar.hpp"

namespace afs {

enum class LabelKind { structural, slack, artificial };

// A variable of the dictionary. Structural ids are 1..p, slack ids p+1..p+m
// (slack i belongs to row i), artificial ids p+m+1..p+2m.
struct Label {
  int id = 0;
  LabelKind kind = LabelKind::structural;
  std::string name;

  friend bool operator==(const Label& a, const Label& b) { return a.id == b.id; }
};

inline Label structural_label(std::size_t j, const std::string& name) {
  return {static_cast<int>(j + 1), LabelKind::structural, name};
}

inline Label slack_label(std::size_t p, std::size_t i) {
  return {static_cast<int>(p + i + 1), LabelKind::slack, "w" + std::to_string(i + 1)};
}

inline Label artificial_label(std::size_t p, std::size_t m, std::size_t i) {
  return {static_cast<int>(p + m + i + 1), LabelKind::artificial, "v" + std::to_string(i + 1)};
}

// The dictionary D(B): an (m+1) x (n+1) array plus ordered label lists.
//
// Reading:  x_B[i] = d(i,0) - sum_j d(i,j) x_N[j]
//           z      = d(0,0) - sum_j d(0,j) x_N[j]
// so row 0 holds negated reduced costs and column 0 the basic values.
// Row and column indices are 1-based for basic/nonbasic positions; index 0
// addresses the objective row and right-hand-side column.
template <Scalar T>
class Dictionary {
 public:
  Dictionary(std::vector<Label> basis, std::vector<Label> nonbasis, std::vector<T> entries,
             Tolerance tol = {})
      : basis_(std::move(basis)),
        nonbasis_(std::move(nonbasis)),
        d_(std::move(entries)),
        tol_(tol) {
    if (d_.size() != (basis_.size() + 1) * (nonbasis_.size() + 1)) {
      throw InvalidProblem("dictionary entry count does not match label lists");
    }
  }

  std::size_t rows() const noexcept { return basis_.size(); }
  std::size_t cols() const noexcept { return nonbasis_.size(); }

  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * stride() + j]; }
  const T& rhs(std::size_t i) const { return (*this)(i, 0); }
  const T& objective_value() const { return (*this)(0, 0); }

  const std::vector<Label>& basis() const noexcept { return basis_; }
  const std::vector<Label>& nonbasis() const noexcept { return nonbasis_; }
  const Label& basic(std::size_t i) const { return basis_.at(i - 1); }
  const Label& nonbasic(std::size_t j) const { return nonbasis_.at(j - 1); }

  Tolerance tolerance() const noexcept { return tol_; }
  Sign sign(std::size_t i, std::size_t j) const { return sign_of((*this)(i, j), tol_); }

  std::optional<std::size_t> row_of(int label_id) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].id == label_id) return i + 1;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> col_of(int label_id) const {
    for (std::size_t j = 0; j < nonbasis_.size(); ++j) {
      if (nonbasis_[j].id == label_id) return j + 1;
    }
    return std::nullopt;
  }

  // Sorted basic label ids.
  std::vector<int> basis_signature() const {
    std::vector<int> sig;
    sig.reserve(basis_.size());
    for (const auto& l : basis_) sig.push_back(l.id);
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  std::vector<T> row(std::size_t i) const {
    return {d_.begin() + i * stride(), d_.begin() + (i + 1) * stride()};
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows() + 1);
    for (std::size_t i = 0; i <= rows(); ++i) out.push_back((*this)(i, j));
    return out;
  }

  // Removes nonbasic column j (1-based).
  Dictionary drop_column(std::size_t j) const {
    std::vector<Label> nb = nonbasis_;
    nb.erase(nb.begin() + static_cast<std::ptrdiff_t>(j - 1));
    std::vector<T> out;
    out.reserve((rows() + 1) * cols());
    for (std::size_t i = 0; i <= rows(); ++i) {
      for (std::size_t k = 0; k <= cols(); ++k) {
        if (k != j) out.push_back((*this)(i, k));
      }
    }
    return Dictionary(basis_, std::move(nb), std::move(out), tol_);
  }

  // Same dictionary with row 0 replaced.
  Dictionary with_objective_row(const std::vector<T>& row0) const {
    if (row0.size() != stride()) throw InvalidProblem("objective row has wrong length");
    std::vector<T> out = d_;
    std::copy(row0.begin(), row0.end(), out.begin());
    return Dictionary(basis_, nonbasis_, std::move(out), tol_);
  }

  const std::vector<T>& entries() const noexcept { return d_; }

  friend bool operator==(const Dictionary& a, const Dictionary& b) {
    auto same_labels = [](const std::vector<Label>& x, const std::vector<Label>& y) {
      return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
    };
    return same_labels(a.basis_, b.basis_) && same_labels(a.nonbasis_, b.nonbasis_) &&
           a.d_ == b.d_;
  }

 private:
  std::size_t stride() const noexcept { return nonbasis_.size() + 1; }

  std::vector<Label> basis_;
  std::vector<Label> nonbasis_;
  std::vector<T> d_;
  Tolerance tol_;
};

// All-slack starting dictionary: d(i,0) = b_i, d(i,j) = A_ij, d(0,j) = -c_j.
template <Scalar T>
Dictionary<T> initial_dictionary(const StandardProblem& sp, Tolerance tol = {}) {
  sp.validate();
  const std::size_t m = sp.rows();
  const std::size_t p = sp.cols();
  std::vector<Label> basis;
  std::vector<Label> nonbasis;
  for (std::size_t i = 0; i < m; ++i) basis.push_back(slack_label(p, i));
  for (std::size_t j = 0; j < p; ++j) {
    nonbasis.push_back(structural_label(
        j, sp.variable_names.empty() ? "x" + std::to_string(j + 1) : sp.variable_names[j]));
  }
  std::vector<T> d;
  d.reserve((m + 1) * (p + 1));
  d.push_back(T(0));
  for (std::size_t j = 0; j < p; ++j) d.push_back(from_rational<T>(Rational(-sp.c[j])));
  for (std::size_t i = 0; i < m; ++i) {
    d.push_back(from_rational<T>(sp.b[i]));
    for (std::size_t j = 0; j < p; ++j) d.push_back(from_rational<T>(sp.A[i][j]));
  }
  return Dictionary<T>(std::move(basis), std::move(nonbasis), std::move(d), tol);
}

// Exchanges basic row r with nonbasic column m (both 1-based).
template <Scalar T>
Dictionary<T> pivot(const Dictionary<T>& D, std::size_t r, std::size_t m) {
  const std::size_t rows = D.rows();
  const std::size_t cols = D.cols();
  if (r < 1 || r > rows || m < 1 || m > cols) throw InvalidProblem("pivot position out of range");
  const Tolerance tol = D.tolerance();
  const T& p = D(r, m);
  if (is_zero(p, tol)) throw ZeroPivot(r, m);

  std::vector<T> out((rows + 1) * (cols + 1));
  auto at = [&](std::size_t i, std::size_t j) -> T& { return out[i * (cols + 1) + j]; };
  for (std::size_t i = 0; i <= rows; ++i) {
    if (i == r) continue;
    const T factor = D(i, m) / p;
    for (std::size_t j = 0; j <= cols; ++j) {
      at(i, j) = (j == m) ? T(-factor) : T(D(i, j) - factor * D(r, j));
    }
  }
  for (std::size_t j = 0; j <= cols; ++j) {
    at(r, j) = (j == m) ? T(T(1) / p) : T(D(r, j) / p);
  }

  std::vector<Label> basis = D.basis();
  std::vector<Label> nonbasis = D.nonbasis();
  std::swap(basis[r - 1], nonbasis[m - 1]);
  return Dictionary<T>(std::move(basis), std::move(nonbasis), std::move(out), tol);
}

struct DictStatus {
  bool primal_feasible = false;
  bool dual_feasible = false;
  std::optional<std::size_t> inconsistent_row;
  std::optional<std::size_t> unbounded_col;
};

template <Scalar T>
DictStatus classify(const Dictionary<T>& D) {
  DictStatus st;
  st.primal_feasible = true;
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.sign(i, 0) != Sign::negative) continue;
    st.primal_feasible = false;
    if (!st.inconsistent_row) {
      bool all_nonneg = true;
      for (std::size_t j = 1; j <= D.cols(); ++j) {
        if (D.sign(i, j) == Sign::negative) {
          all_nonneg = false;
          break;
        }
      }
      if (all_nonneg) st.inconsistent_row = i;
    }
  }
  st.dual_feasible = true;
  for (std::size_t j = 1; j <= D.cols(); ++j) {
    if (D.sign(0, j) != Sign::negative) continue;
    st.dual_feasible = false;
    if (!st.unbounded_col) {
      bool all_nonpos = true;
      for (std::size_t i = 1; i <= D.rows(); ++i) {
        if (D.sign(i, j) == Sign::positive) {
          all_nonpos = false;
          break;
        }
      }
      if (all_nonpos) st.unbounded_col = j;
    }
  }
  return st;
}

template <Scalar T>
struct BasicSolution {
  std::vector<std::pair<Label, T>> values;  // every label, ordered by id
  T objective;

  const T& value(int label_id) const {
    for (const auto& [l, v] : values) {
      if (l.id == label_id) return v;
    }
    throw InvalidProblem("unknown label id " + std::to_string(label_id));
  }
};

template <Scalar T>
BasicSolution<T> basic_solution(const Dictionary<T>& D) {
  BasicSolution<T> sol{{}, D.objective_value()};
  for (std::size_t i = 1; i <= D.rows(); ++i) sol.values.emplace_back(D.basic(i), D.rhs(i));
  for (const auto& l : D.nonbasis()) sol.values.emplace_back(l, T(0));
  std::sort(sol.values.begin(), sol.values.end(),
            [](const auto& a, const auto& b) { return a.first.id < b.first.id; });
  return sol;
}

// Basic solution restricted to structural variables, ordered by id.
template <Scalar T>
std::vector<T> corner_point(const Dictionary<T>& D) {
  std::vector<std::pair<int, T>> xs;
  for (std::size_t i = 1; i <= D.rows(); ++i) {
    if (D.basic(i).kind == LabelKind::structural) xs.emplace_back(D.basic(i).id, D.rhs(i));
  }
  for (const auto& l : D.nonbasis()) {
    if (l.kind == LabelKind::structural) xs.emplace_back(l.id, T(0));
  }
  std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<T> out;
  out.reserve(xs.size());
  for (auto& [id, v] : xs) out.push_back(std::move(v));
  return out;
}

// The dual dictionary: rows indexed by D's nonbasis, columns by D's basis,
// d*(j,i) = -d(i,j), d*(j,0) = d(0,j), d*(0,i) = d(i,0), d*(0,0) = -d(0,0).
template <Scalar T>
Dictionary<T> negative_transpose(const Dictionary<T>& D) {
  const std::size_t rows = D.cols();
  const std::size_t cols = D.rows();
  std::vector<T> out;
  out.reserve((rows + 1) * (cols + 1));
  out.push_back(T(-D(0, 0)));
  for (std::size_t i = 1; i <= cols; ++i) out.push_back(D(i, 0));
  for (std::size_t j = 1; j <= rows; ++j) {
    out.push_back(D(0, j));
    for (std::size_t i = 1; i <= cols; ++i) out.push_back(T(-D(i, j)));
  }
  return Dictionary<T>(D.nonbasis(), D.basis(), std::move(out), D.tolerance());
}

}  // namespace afs
