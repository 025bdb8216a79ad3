#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "afsimplex/afsimplex.hpp"
#include "afsimplex/json_io.hpp"

namespace afs::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kUnbounded = 2,
  kSafeguard = 3,
  kUsage = 64,
  kParse = 65,
};

struct SolveFlags {
  std::string file;
  std::string method = "af";
  std::string tie = "smallest-label";
  std::string numeric = "rational";
  double eps = 1e-9;
  std::optional<std::size_t> max_iters;
  bool trick = false;
  std::string trace_out;
  std::string report_out;
  bool quiet = false;
};

struct GenFlags {
  std::uint64_t seed = 1;
  std::size_t rows = 3;
  std::size_t cols = 2;
  std::string shape = "feasible";
  int coeff_min = -9;
  int coeff_max = 9;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline SolveConfig make_config(const SolveFlags& f) {
  SolveConfig cfg;
  if (f.method == "af") {
    cfg.method = Phase1Method::artificial_free;
  } else if (f.method == "trad") {
    cfg.method = Phase1Method::traditional;
  } else {
    throw UsageError("unknown method '" + f.method + "'");
  }
  auto tie = parse_tie_break(f.tie);
  if (!tie) throw UsageError("unknown tie-break '" + f.tie + "'");
  cfg.tie = *tie;
  cfg.use_trick = f.trick;
  cfg.limits.max_iterations = f.max_iters;
  if (!(f.eps > 0)) throw UsageError("--eps must be positive");
  cfg.tol.eps = f.eps;
  return cfg;
}

inline std::string format_scalar(const Rational& q) { return q.str(); }
inline std::string format_scalar(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

template <Scalar T>
int run_solve(const StandardProblem& sp, const SolveFlags& f, std::ostream& out) {
  const auto outcome = solve<T>(sp, make_config(f));
  if (!f.trace_out.empty()) write_file(f.trace_out, emit_outcome_json(outcome));
  if (!f.quiet) {
    out << "status: " << to_string(outcome.status) << "\n";
    if (outcome.objective) out << "objective: " << format_scalar(*outcome.objective) << "\n";
    for (std::size_t k = 0; k < outcome.solution.size(); ++k) {
      out << "  " << outcome.variable_names[k] << " = " << format_scalar(outcome.solution[k]) << "\n";
    }
    out << "phase 1 (" << to_string(outcome.phase1.method) << "): " << outcome.phase1.pivot_count()
        << " pivots, " << outcome.phase1.degenerate_pivots << " degenerate\n";
    if (outcome.phase2) {
      out << "phase 2: " << outcome.phase2->pivot_count() << " pivots, "
          << outcome.phase2->degenerate_pivots << " degenerate\n";
    }
    if (!outcome.certificates.infeasible_rows.empty()) {
      out << "infeasible rows:";
      for (const auto& r : outcome.certificates.infeasible_rows) out << " " << r;
      out << "\n";
    }
    if (!outcome.certificates.ray.empty()) {
      out << "ray:";
      for (const auto& v : outcome.certificates.ray) out << " " << format_scalar(v);
      out << "\n";
    }
  }
  switch (outcome.status) {
    case SolveStatus::optimal: return kOk;
    case SolveStatus::infeasible: return kInfeasible;
    case SolveStatus::unbounded: return kUnbounded;
    default: return kSafeguard;
  }
}

template <Scalar T>
int run_compare(const StandardProblem& sp, const SolveFlags& f, std::ostream& out) {
  const auto rep = compare<T>(sp, make_config(f));
  if (!f.report_out.empty()) write_file(f.report_out, emit_comparison_json(rep));
  if (!f.quiet) {
    auto line = [&](const char* name, const MethodSummary<T>& s) {
      out << name << ": " << to_string(s.verdict) << ", " << s.pivots << " pivots, "
          << s.degenerate_pivots << " degenerate, corners";
      for (const auto& c : s.corners) {
        out << " (";
        for (std::size_t k = 0; k < c.size(); ++k) out << (k ? "," : "") << format_scalar(c[k]);
        out << ")";
      }
      out << "\n";
    };
    line("artificial-free", rep.artificial_free);
    line("traditional", rep.traditional);
    out << "verdicts equal: " << (rep.verdicts_equal ? "yes" : "no") << "\n";
    out << "corner sequences equal: " << (rep.corner_sequences_equal ? "yes" : "no") << "\n";
    out << "af pivots <= traditional: " << (rep.af_pivots_le_traditional ? "yes" : "no") << "\n";
  }
  switch (rep.artificial_free.verdict) {
    case RunStatus::feasible: return kOk;
    case RunStatus::infeasible: return kInfeasible;
    default: return kSafeguard;
  }
}

inline int run_oracle(const StandardProblem& sp, std::ostream& out) {
  OracleResult res;
  try {
    res = enumerate_vertices(sp);
  } catch (const TooLarge& e) {
    out << "error: " << e.what() << "\n";
    return kSafeguard;
  }
  out << "bases examined: " << res.bases_examined << "\n";
  out << "vertices: " << res.vertices.size() << "\n";
  for (const auto& v : res.vertices) {
    out << "  (";
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k].str();
    out << ")\n";
  }
  if (!res.feasible) {
    out << "status: infeasible\n";
    return kInfeasible;
  }
  if (res.unbounded) {
    out << "status: unbounded\nray:";
    for (const auto& r : res.ray) out << " " << r.str();
    out << "\n";
    return kUnbounded;
  }
  out << "status: optimal\nobjective: " << original_objective(sp, *res.optimal_value).str() << "\n";
  return kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artificial-free phase 1 simplex solver"};
  app.require_subcommand(1);

  SolveFlags sf;
  GenFlags gf;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", sf.file, "LP file")->required();
    sub->add_option("--method", sf.method, "phase 1 method: af | trad");
    sub->add_option("--tie", sf.tie,
                    "leaving tie-break: smallest-label | smallest-abs-pivot | largest-abs-pivot");
    sub->add_option("--numeric", sf.numeric, "rational | float");
    sub->add_option("--eps", sf.eps, "sign tolerance in float mode");
    sub->add_option("--max-iters", sf.max_iters, "pivot limit per phase");
    sub->add_flag("--trick", sf.trick, "conjugate-slack exit for zero artificials (trad)");
    sub->add_flag("--quiet", sf.quiet, "suppress the summary");
  };
  auto* solve_cmd = app.add_subcommand("solve", "two-phase solve");
  add_common(solve_cmd);
  solve_cmd->add_option("--trace", sf.trace_out, "write the outcome JSON here");
  auto* compare_cmd = app.add_subcommand("compare", "compare both phase 1 methods");
  add_common(compare_cmd);
  compare_cmd->add_option("--report", sf.report_out, "write the comparison JSON here");

  auto* gen_cmd = app.add_subcommand("gen", "generate a random LP");
  gen_cmd->add_option("--seed", gf.seed)->required();
  gen_cmd->add_option("--rows", gf.rows)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cols", gf.cols)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--shape", gf.shape, "feasible | infeasible | degenerate");
  gen_cmd->add_option("--coeff-min", gf.coeff_min);
  gen_cmd->add_option("--coeff-max", gf.coeff_max);
  gen_cmd->add_option("--out", gf.out)->required();

  std::string oracle_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force vertex enumeration");
  oracle_cmd->add_option("file", oracle_file, "LP file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      auto shape = parse_shape(gf.shape);
      if (!shape) throw UsageError("unknown shape '" + gf.shape + "'");
      GeneratorConfig cfg{gf.seed, gf.rows, gf.cols, gf.coeff_min, gf.coeff_max, *shape};
      write_file(gf.out, print_lp(generate_lp(cfg)));
      return kOk;
    }
    const std::string& path = oracle_cmd->parsed() ? oracle_file : sf.file;
    const std::string text = read_file(path);
    StandardProblem sp;
    try {
      sp = standardize(parse_lp(text));
    } catch (const ParseError& e) {
      err << path << ":" << e.what() << "\n";
      return kParse;
    } catch (const Error& e) {
      err << path << ": " << e.what() << "\n";
      return kParse;
    }
    if (oracle_cmd->parsed()) return run_oracle(sp, out);
    if (sf.numeric != "rational" && sf.numeric != "float") {
      throw UsageError("unknown numeric mode '" + sf.numeric + "'");
    }
    const bool exact = sf.numeric == "rational";
    if (solve_cmd->parsed()) {
      return exact ? run_solve<Rational>(sp, sf, out) : run_solve<double>(sp, sf, out);
    }
    return exact ? run_compare<Rational>(sp, sf, out) : run_compare<double>(sp, sf, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kSafeguard;
  }
}

}  // namespace afs::cli
