#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <string>

#include "afsimplex/errors.hpp"

namespace afs {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

enum class Sign { negative, zero, positive };

enum class NumericMode { exact_rational, floating };

// Sign-test tolerance. Only consulted by floating-point scalars.
struct Tolerance {
  double eps = 1e-9;
};

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
constexpr NumericMode numeric_mode() {
  if constexpr (std::same_as<T, Rational>) {
    return NumericMode::exact_rational;
  } else {
    return NumericMode::floating;
  }
}

inline Sign sign_of(const Rational& x, Tolerance = {}) {
  const int s = x.sign();
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign sign_of(double x, Tolerance tol = {}) {
  if (x < -tol.eps) return Sign::negative;
  if (x > tol.eps) return Sign::positive;
  return Sign::zero;
}

template <Scalar T>
bool is_negative(const T& x, Tolerance tol) {
  return sign_of(x, tol) == Sign::negative;
}
template <Scalar T>
bool is_positive(const T& x, Tolerance tol) {
  return sign_of(x, tol) == Sign::positive;
}
template <Scalar T>
bool is_zero(const T& x, Tolerance tol) {
  return sign_of(x, tol) == Sign::zero;
}

template <Scalar T>
T divide(const T& num, const T& den, Tolerance tol) {
  if (is_zero(den, tol)) throw DivisionByZero();
  return num / den;
}

template <Scalar T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

template <Scalar T>
T from_rational(const Rational& q) {
  if constexpr (std::same_as<T, Rational>) {
    return q;
  } else {
    return q.convert_to<double>();
  }
}

// Exact rational image of a scalar. Finite doubles are dyadic rationals, so
// the conversion is lossless.
template <Scalar T>
Rational to_rational(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return x;
  } else {
    if (!std::isfinite(x)) throw InvalidProblem("non-finite floating value");
    return Rational(x);
  }
}

inline std::string to_string(const Rational& q) {
  return q.str();
}

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(num, den);
}

}  // namespace afs
