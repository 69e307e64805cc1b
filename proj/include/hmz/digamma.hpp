#pragma once

// Digamma family on the positive half-line, plus the harmonic mean.

#include "hmz/eval_result.hpp"

namespace hmz {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Harmonic mean 2ab/(a+b). Throws HarmonicMeanPole when a + b = 0 or the
/// quotient is not finite.
double harmonic_mean(double a, double b);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
EvalResult digamma(double x);

/// psi'(x) for x > 0.
EvalResult trigamma(double x);

/// psi''(x) for x > 0.
EvalResult digamma2(double x);

/// Dispatch on derivative order 0..2.
EvalResult polygamma(int order, double x);

struct DigammaZero {
  double x0;
};

/// The unique positive zero of psi, bracketed in (1, 2).
/// Computed once by bisection and cached.
DigammaZero digamma_zero();

}  // namespace hmz
