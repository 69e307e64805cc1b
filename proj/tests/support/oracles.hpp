#pragma once

// Independent reference implementations used only by the tests. None of them
// calls into the library.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<long double>;

// Boost.Math at 50 decimal digits, rounded to double.
double digamma(double x);
double trigamma(double x);
double polygamma(int n, double x);
double zeta(double s);

/// (s-1) zeta(s) by Euler-Maclaurin summation; entire, so safe at s = 1.
cplx g_entire(cplx s);

/// zeta(s) - 1/(s-1) for complex s.
cplx zeta_regular(cplx s);

/// k-th derivative of zeta(s) - 1/(s-1) at real x, by a Cauchy integral.
long double zeta_regular_derivative(double x, int k);

/// k-th derivative of zeta at real x != 1 via a Cauchy integral of the
/// regular part plus the exact pole contribution.
long double zeta_derivative(double x, int k);

/// Stieltjes constants gamma_0..gamma_max from a discrete Laurent fit of
/// (s-1)zeta(s) on the circle |s - 1| = radius with `points` nodes.
std::vector<long double> stieltjes_laurent_fit(int max_index, int points = 16,
                                               long double radius = 0.3L);

/// Dirichlet eta by direct partial sums with repeated averaging (Euler
/// transform of the tail), real s > 0.
long double eta_averaged(double s);

/// Real roots of a double polynomial (ascending coefficients) in (a, b),
/// found by recursing on the derivative and bisecting each monotone piece.
std::vector<double> bisection_roots(const std::vector<double>& coeffs, double a, double b);

struct RandomPoly {
  std::vector<std::int64_t> numer;  // ascending integer coefficients
  std::vector<double> real_roots;   // by construction, distinct
};

/// Product of distinct linear factors (2x - m) with small integers m and an
/// optional quadratic x^2 + q. Degree <= 6.
RandomPoly random_poly(std::mt19937_64& rng);

}  // namespace oracle
