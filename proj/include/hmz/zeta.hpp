#pragma once

// Dirichlet eta and Riemann zeta on the positive real axis, with derivatives
// up to order 3.
//
// Two independent evaluation paths:
//  * eta path: accelerated alternating series for eta^(j), then
//    zeta = eta / (1 - 2^{1-s}) differentiated by the Leibniz rule;
//  * Laurent path: 1/(s-1) + sum gamma_n/n! (1-s)^n near the pole, with a
//    truncation bound derived from the Stieltjes-constant bounds.
// zeta() picks the Laurent path inside LaurentConfig::radius of s = 1.

#include "hmz/eval_result.hpp"

namespace hmz {

inline constexpr int kMaxDerivative = 3;
inline constexpr double kPoleGuard = 1e-8;

struct LaurentConfig {
  double radius = 0.25;  // switch radius around s = 1, in (0, 1)
  int terms = 20;        // highest Stieltjes index used
};

/// Remainder bound for the Laurent series of zeta^(order) truncated after
/// `cfg.terms`, at distance `dist` from s = 1.
double laurent_tail_bound(const LaurentConfig& cfg, double dist, int order);

/// eta^(k)(s) for s > 0, k = 0..3.
EvalResult eta(double s, int k = 0);

/// zeta^(k)(s) for s > 0, |s - 1| >= 1e-8, k = 0..3.
EvalResult zeta(double s, int k = 0);

/// zeta^(k)(s) through the eta quotient only. Loses accuracy as s -> 1.
EvalResult zeta_eta_path(double s, int k = 0);

/// zeta^(k)(s) from the truncated Laurent series; requires
/// 0 < |s - 1| < cfg.radius.
EvalResult laurent_zeta(double s, int k, const LaurentConfig& cfg = {});

/// zeta^(k)(s) - (-1)^k k!/(s-1)^{k+1}: the part of zeta^(k) that is regular
/// at s = 1. Summed from the Stieltjes series inside the Laurent disc (valid
/// at s = 1 itself), otherwise by subtraction.
EvalResult zeta_regular(double s, int k = 0);

struct Bracket {
  double lo;
  double hi;
};

/// Bounds on (-1)^n zeta^(n)(x), x in (0, 1), obtained from |gamma_k| <= k!/2^{k+1}:
///   lo = -(-1)^n n!/(1-x)^{n+1} - n!/(1+x)^{n+1}
///   hi =  n!/(1+x)^{n+1} - (-1)^n n!/(1-x)^{n+1}
Bracket zeta_sandwich(int n, double x);

}  // namespace hmz
