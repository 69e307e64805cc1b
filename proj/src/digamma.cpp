#include "hmz/digamma.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hmz/errors.hpp"

namespace hmz {
namespace {

// B_2, B_4, ..., B_20
constexpr std::array<double, 10> kBernoulliEven = {
    1.0 / 6.0,        -1.0 / 30.0,     1.0 / 42.0,         -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0, 7.0 / 6.0,          -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0};

constexpr double kShiftThreshold = 10.0;

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(name) + ": requires finite x > 0");
  }
}

// Upward recurrence: returns the shifted argument and accumulates the shift
// correction sum_{j} sign * order! / (x + j)^(order + 1) into `shift`.
struct Shifted {
  double x;
  double shift = 0.0;
  double shift_abs = 0.0;
  int steps = 0;
};

Shifted shift_up(double x, int order) {
  Shifted s{x};
  while (s.x < kShiftThreshold) {
    double t = 1.0 / s.x;
    if (order >= 1) t /= s.x;
    if (order >= 2) t = 2.0 * t / s.x;
    s.shift += t;
    s.shift_abs += std::abs(t);
    s.x += 1.0;
    ++s.steps;
  }
  return s;
}

}  // namespace

double harmonic_mean(double a, double b) {
  const double sum = a + b;
  if (sum == 0.0) throw HarmonicMeanPole();
  const double h = 2.0 * a * b / sum;
  if (!std::isfinite(h)) throw HarmonicMeanPole();
  return h;
}

EvalResult digamma(double x) {
  require_positive(x, "digamma");
  const Shifted s = shift_up(x, 0);
  const double y = s.x;
  const double inv2 = 1.0 / (y * y);
  double series = 0.0;
  double term = 0.0;
  double p = inv2;
  for (std::size_t k = 0; k < kBernoulliEven.size(); ++k) {
    term = kBernoulliEven[k] / (2.0 * (k + 1)) * p;
    series += term;
    p *= inv2;
  }
  const double asym = std::log(y) - 0.5 / y - series;
  const double value = asym - s.shift;
  const double err = std::abs(term) +
                     (s.steps + 4) * kEps * (std::abs(asym) + s.shift_abs);
  return {value, err};
}

EvalResult trigamma(double x) {
  require_positive(x, "trigamma");
  const Shifted s = shift_up(x, 1);
  const double y = s.x;
  const double inv2 = 1.0 / (y * y);
  double series = 0.0;
  double term = 0.0;
  double p = inv2 / y;
  for (double b : kBernoulliEven) {
    term = b * p;
    series += term;
    p *= inv2;
  }
  const double asym = 1.0 / y + 0.5 * inv2 + series;
  const double value = asym + s.shift;
  const double err = std::abs(term) +
                     (s.steps + 4) * kEps * (std::abs(asym) + s.shift_abs);
  return {value, err};
}

EvalResult digamma2(double x) {
  require_positive(x, "digamma2");
  const Shifted s = shift_up(x, 2);
  const double y = s.x;
  const double inv2 = 1.0 / (y * y);
  double series = 0.0;
  double term = 0.0;
  double p = inv2 * inv2;
  for (std::size_t k = 0; k < kBernoulliEven.size(); ++k) {
    term = (2.0 * (k + 1) + 1.0) * kBernoulliEven[k] * p;
    series += term;
    p *= inv2;
  }
  const double asym = -inv2 - inv2 / y - series;
  const double value = asym - s.shift;
  const double err = std::abs(term) +
                     (s.steps + 4) * kEps * (std::abs(asym) + s.shift_abs);
  return {value, err};
}

EvalResult polygamma(int order, double x) {
  switch (order) {
    case 0: return digamma(x);
    case 1: return trigamma(x);
    case 2: return digamma2(x);
    default: throw UnsupportedError("polygamma: order must be 0, 1 or 2");
  }
}

DigammaZero digamma_zero() {
  static const DigammaZero zero = [] {
    double lo = 1.0;
    double hi = 2.0;
    // psi(1) < 0 < psi(2)
    while (hi - lo > 1e-14) {
      const double mid = 0.5 * (lo + hi);
      if (digamma(mid).value < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return DigammaZero{0.5 * (lo + hi)};
  }();
  return zero;
}

}  // namespace hmz
