#pragma once

#include <cmath>
#include <limits>

namespace hmz {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// A function value paired with an absolute-error estimate.
//
// The arithmetic operators propagate first-order error bounds and add one
// rounding unit of the result, so composite expressions built from kernel
// calls carry a usable (heuristic) error estimate.
struct EvalResult {
  double value = 0.0;
  double est_error = 0.0;

  constexpr EvalResult() = default;
  constexpr EvalResult(double v, double e = 0.0) : value(v), est_error(e) {}
};

inline EvalResult operator-(EvalResult a) { return {-a.value, a.est_error}; }

inline EvalResult operator+(EvalResult a, EvalResult b) {
  const double v = a.value + b.value;
  return {v, a.est_error + b.est_error + kEps * std::abs(v)};
}

inline EvalResult operator-(EvalResult a, EvalResult b) {
  const double v = a.value - b.value;
  return {v, a.est_error + b.est_error + kEps * std::abs(v)};
}

inline EvalResult operator*(EvalResult a, EvalResult b) {
  const double v = a.value * b.value;
  return {v, std::abs(a.value) * b.est_error + std::abs(b.value) * a.est_error +
                 a.est_error * b.est_error + kEps * std::abs(v)};
}

inline EvalResult operator/(EvalResult a, EvalResult b) {
  const double v = a.value / b.value;
  const double denom = std::abs(b.value) - b.est_error;
  const double e = denom > 0.0
                       ? (a.est_error + std::abs(v) * b.est_error) / denom
                       : std::numeric_limits<double>::infinity();
  return {v, e + kEps * std::abs(v)};
}

inline EvalResult& operator+=(EvalResult& a, EvalResult b) { return a = a + b; }
inline EvalResult& operator-=(EvalResult& a, EvalResult b) { return a = a - b; }
inline EvalResult& operator*=(EvalResult& a, EvalResult b) { return a = a * b; }

// log|a|
inline EvalResult log_abs(EvalResult a) {
  const double v = std::log(std::abs(a.value));
  return {v, a.est_error / std::abs(a.value) + kEps * std::abs(v)};
}

inline EvalResult abs(EvalResult a) { return {std::abs(a.value), a.est_error}; }

}  // namespace hmz
