#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "afsimplex/errors.hpp"
#include "afsimplex/scalar.hpp"

namespace afs {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, greater_equal, equal };

// Coefficients keyed by variable name. Absent variables have coefficient 0.
using LinearExpr = std::map<std::string, Rational>;

struct Constraint {
  std::string name;
  LinearExpr expr;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

// A linear program with mixed relations, as written by a user.
//
// Variables are registered in order of first appearance (objective first).
// All variables are implicitly nonnegative unless declared free, which
// standardize() rejects.
class GeneralProblem {
 public:
  GeneralProblem() = default;

  std::size_t add_variable(const std::string& name) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    index_.emplace(name, variables_.size());
    variables_.push_back(name);
    return variables_.size() - 1;
  }

  void set_objective(Sense sense, const LinearExpr& expr) {
    sense_ = sense;
    for (const auto& [var, coef] : expr) add_variable(var);
    objective_ = expr;
  }

  // Registers the objective in the caller's term order, so the variable
  // registry follows first appearance in the source text.
  void set_objective(Sense sense, const std::vector<std::pair<std::string, Rational>>& terms) {
    sense_ = sense;
    objective_.clear();
    for (const auto& [var, coef] : terms) {
      add_variable(var);
      objective_[var] += coef;
    }
  }

  void add_constraint(Constraint c) {
    if (c.name.empty()) c.name = "R" + std::to_string(constraints_.size() + 1);
    if (!constraint_names_.insert(c.name).second) {
      throw InvalidProblem("duplicate constraint name '" + c.name + "'");
    }
    for (const auto& [var, coef] : c.expr) add_variable(var);
    constraints_.push_back(std::move(c));
  }

  void add_constraint(const std::string& name, const LinearExpr& expr, Relation rel,
                      const Rational& rhs) {
    add_constraint(Constraint{name, expr, rel, rhs});
  }

  void declare_free(const std::string& name) {
    add_variable(name);
    free_.insert(name);
  }

  Sense sense() const noexcept { return sense_; }
  const LinearExpr& objective() const noexcept { return objective_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  const std::set<std::string>& free_variables() const noexcept { return free_; }

  Rational objective_coefficient(const std::string& var) const {
    auto it = objective_.find(var);
    return it == objective_.end() ? Rational(0) : it->second;
  }

  // Evaluates every constraint at a point given in registry order.
  bool satisfied_by(const std::vector<Rational>& x) const {
    if (x.size() != variables_.size()) return false;
    for (const auto& v : x) {
      if (v < 0) return false;
    }
    for (const auto& c : constraints_) {
      Rational lhs = 0;
      for (const auto& [var, coef] : c.expr) lhs += coef * x[index_.at(var)];
      switch (c.relation) {
        case Relation::less_equal:
          if (lhs > c.rhs) return false;
          break;
        case Relation::greater_equal:
          if (lhs < c.rhs) return false;
          break;
        case Relation::equal:
          if (lhs != c.rhs) return false;
          break;
      }
    }
    return true;
  }

  Rational objective_value(const std::vector<Rational>& x) const {
    Rational z = 0;
    for (std::size_t j = 0; j < variables_.size(); ++j) {
      z += objective_coefficient(variables_[j]) * x.at(j);
    }
    return z;
  }

  // Structural equality; zero and absent coefficients are equivalent.
  friend bool operator==(const GeneralProblem& a, const GeneralProblem& b) {
    if (a.sense_ != b.sense_ || a.variables_ != b.variables_ || a.free_ != b.free_) return false;
    if (a.constraints_.size() != b.constraints_.size()) return false;
    auto same_expr = [&](const LinearExpr& x, const LinearExpr& y) {
      for (const auto& v : a.variables_) {
        auto cx = x.find(v);
        auto cy = y.find(v);
        Rational qx = cx == x.end() ? Rational(0) : cx->second;
        Rational qy = cy == y.end() ? Rational(0) : cy->second;
        if (qx != qy) return false;
      }
      return true;
    };
    if (!same_expr(a.objective_, b.objective_)) return false;
    for (std::size_t i = 0; i < a.constraints_.size(); ++i) {
      const auto& ca = a.constraints_[i];
      const auto& cb = b.constraints_[i];
      if (ca.name != cb.name || ca.relation != cb.relation || ca.rhs != cb.rhs ||
          !same_expr(ca.expr, cb.expr)) {
        return false;
      }
    }
    return true;
  }

 private:
  Sense sense_ = Sense::maximize;
  LinearExpr objective_;
  std::vector<std::string> variables_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Constraint> constraints_;
  std::set<std::string> constraint_names_;
  std::set<std::string> free_;
};

// Where a standard row came from.
struct RowOrigin {
  std::size_t constraint = 0;  // index into GeneralProblem::constraints()
  bool negated = false;        // row = -(original row)
  bool from_equality = false;  // one half of a split equality
};

// max c.x  s.t.  A x <= b,  x >= 0.  b may have entries of either sign.
struct StandardProblem {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<std::string> variable_names;
  std::vector<std::string> row_names;
  std::vector<RowOrigin> origins;
  // Set when the source problem minimized: c holds the negated objective.
  bool objective_negated = false;

  std::size_t rows() const noexcept { return A.size(); }
  std::size_t cols() const noexcept { return c.size(); }

  void validate() const {
    if (rows() == 0) throw EmptyProblem();
    if (cols() == 0) throw EmptyProblem("problem has no variables");
    if (b.size() != rows()) throw InvalidProblem("rhs length does not match row count");
    for (const auto& row : A) {
      if (row.size() != cols()) throw InvalidProblem("ragged constraint matrix");
    }
    if (!variable_names.empty() && variable_names.size() != cols()) {
      throw InvalidProblem("variable name count does not match column count");
    }
    if (!row_names.empty() && row_names.size() != rows()) {
      throw InvalidProblem("row name count does not match row count");
    }
  }

  // Columns of A that are identically zero. Permitted, but worth flagging.
  std::vector<std::size_t> zero_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cols(); ++j) {
      bool zero = std::all_of(A.begin(), A.end(), [&](const auto& row) { return row[j] == 0; });
      if (zero) out.push_back(j);
    }
    return out;
  }

  bool satisfied_by(const std::vector<Rational>& x) const {
    if (x.size() != cols()) return false;
    for (const auto& v : x) {
      if (v < 0) return false;
    }
    for (std::size_t i = 0; i < rows(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < cols(); ++j) lhs += A[i][j] * x[j];
      if (lhs > b[i]) return false;
    }
    return true;
  }

  Rational objective_value(const std::vector<Rational>& x) const {
    Rational z = 0;
    for (std::size_t j = 0; j < cols(); ++j) z += c[j] * x.at(j);
    return z;
  }

  // Builds a problem from raw data, naming columns x1.. and rows r1..
  static StandardProblem from_rows(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                                   std::vector<Rational> c) {
    StandardProblem sp;
    sp.A = std::move(A);
    sp.b = std::move(b);
    sp.c = std::move(c);
    for (std::size_t j = 0; j < sp.c.size(); ++j) {
      sp.variable_names.push_back("x" + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < sp.A.size(); ++i) {
      sp.row_names.push_back("r" + std::to_string(i + 1));
      sp.origins.push_back(RowOrigin{i, false, false});
    }
    sp.validate();
    return sp;
  }
};

// Converts to the <= / nonnegative / maximize form. Minimization negates c,
// >= rows are negated, and = rows become a <= pair.
inline StandardProblem standardize(const GeneralProblem& gp) {
  if (!gp.free_variables().empty()) throw UnsupportedFreeVariable(*gp.free_variables().begin());
  if (gp.constraints().empty()) throw EmptyProblem();
  if (gp.variables().empty()) throw EmptyProblem("problem has no variables");

  StandardProblem sp;
  sp.variable_names = gp.variables();
  sp.objective_negated = gp.sense() == Sense::minimize;
  for (const auto& v : gp.variables()) {
    Rational coef = gp.objective_coefficient(v);
    sp.c.push_back(sp.objective_negated ? Rational(-coef) : coef);
  }

  auto dense_row = [&](const LinearExpr& expr, bool negate) {
    std::vector<Rational> row;
    row.reserve(gp.variables().size());
    for (const auto& v : gp.variables()) {
      auto it = expr.find(v);
      Rational q = it == expr.end() ? Rational(0) : it->second;
      row.push_back(negate ? Rational(-q) : q);
    }
    return row;
  };

  for (std::size_t k = 0; k < gp.constraints().size(); ++k) {
    const auto& con = gp.constraints()[k];
    switch (con.relation) {
      case Relation::less_equal:
        sp.A.push_back(dense_row(con.expr, false));
        sp.b.push_back(con.rhs);
        sp.row_names.push_back(con.name);
        sp.origins.push_back({k, false, false});
        break;
      case Relation::greater_equal:
        sp.A.push_back(dense_row(con.expr, true));
        sp.b.push_back(-con.rhs);
        sp.row_names.push_back(con.name);
        sp.origins.push_back({k, true, false});
        break;
      case Relation::equal:
        sp.A.push_back(dense_row(con.expr, false));
        sp.b.push_back(con.rhs);
        sp.row_names.push_back(con.name + ".le");
        sp.origins.push_back({k, false, true});
        sp.A.push_back(dense_row(con.expr, true));
        sp.b.push_back(-con.rhs);
        sp.row_names.push_back(con.name + ".ge");
        sp.origins.push_back({k, true, true});
        break;
    }
  }
  sp.validate();
  return sp;
}

// Objective in the sense of the source problem, given the value of the
// standard (maximizing) objective.
inline Rational original_objective(const StandardProblem& sp, const Rational& standard_value) {
  return sp.objective_negated ? Rational(-standard_value) : standard_value;
}

}  // namespace afs
