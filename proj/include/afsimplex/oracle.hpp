#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "afsimplex/errors.hpp"
#include "afsimplex/problem.hpp"
#include "afsimplex/scalar.hpp"

// Brute-force reference solver. Independent of every pivoting routine: it
// enumerates all choices of p tight constraints among the m rows and p sign
// bounds (equivalently, all bases of [A | I]), solves each square system
// exactly, and keeps the feasible solutions.

namespace afs {

struct OracleResult {
  bool feasible = false;
  std::vector<std::vector<Rational>> vertices;  // distinct, sorted
  bool unbounded = false;
  std::vector<Rational> ray;                     // improving feasible ray if unbounded
  std::optional<Rational> optimal_value;         // standard (maximize) sense
  std::optional<std::vector<Rational>> optimal_vertex;
  std::size_t bases_examined = 0;
};

inline constexpr double kOracleBasisGuard = 1e6;

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

namespace detail {

// Gauss-Jordan inverse; nullopt if singular.
inline std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> M) {
  const std::size_t n = M.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = M[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      M[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col] == 0) continue;
      const Rational f = M[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        M[i][j] -= f * M[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

inline OracleResult enumerate_vertices(const StandardProblem& sp,
                                       double guard = kOracleBasisGuard) {
  sp.validate();
  const std::size_t m = sp.rows();
  const std::size_t p = sp.cols();
  if (binomial(m + p, p) > guard) {
    throw TooLarge("vertex enumeration over C(" + std::to_string(m + p) + ", " +
                   std::to_string(m) + ") bases exceeds the guard");
  }

  // Constraint k: g_k . x <= h_k. Rows of A first, then -x_j <= 0.
  const std::size_t total = m + p;
  std::vector<std::vector<Rational>> G(total, std::vector<Rational>(p, Rational(0)));
  std::vector<Rational> h(total, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    G[i] = sp.A[i];
    h[i] = sp.b[i];
  }
  for (std::size_t j = 0; j < p; ++j) G[m + j][j] = -1;

  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
  };

  OracleResult res;
  std::set<std::vector<Rational>> vertices;
  std::vector<std::size_t> tight(p);
  for (std::size_t k = 0; k < p; ++k) tight[k] = k;

  for (;;) {
    ++res.bases_examined;
    std::vector<std::vector<Rational>> M;
    M.reserve(p);
    for (std::size_t k : tight) M.push_back(G[k]);
    if (auto inv = detail::invert(std::move(M))) {
      std::vector<Rational> x(p, Rational(0));
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t k = 0; k < p; ++k) x[r] += (*inv)[r][k] * h[tight[k]];
      }
      bool ok = true;
      for (std::size_t k = 0; k < total && ok; ++k) ok = dot(G[k], x) <= h[k];
      if (ok) {
        vertices.insert(x);
        // Edges: relax one tight constraint, keep the others tight.
        for (std::size_t e = 0; e < p && !res.unbounded; ++e) {
          std::vector<Rational> d(p);
          for (std::size_t r = 0; r < p; ++r) d[r] = -(*inv)[r][e];
          if (dot(sp.c, d) <= 0) continue;
          bool ray = true;
          for (std::size_t k = 0; k < total && ray; ++k) ray = dot(G[k], d) <= 0;
          if (ray) {
            res.unbounded = true;
            res.ray = d;
          }
        }
      }
    }
    // Next combination.
    std::size_t k = p;
    while (k > 0 && tight[k - 1] == total - p + (k - 1)) --k;
    if (k == 0) break;
    ++tight[k - 1];
    for (std::size_t j = k; j < p; ++j) tight[j] = tight[j - 1] + 1;
  }

  res.vertices.assign(vertices.begin(), vertices.end());
  res.feasible = !res.vertices.empty();
  if (res.feasible && !res.unbounded) {
    for (const auto& v : res.vertices) {
      Rational z = dot(sp.c, v);
      if (!res.optimal_value || z > *res.optimal_value) {
        res.optimal_value = z;
        res.optimal_vertex = v;
      }
    }
  }
  return res;
}

}  // namespace afs
