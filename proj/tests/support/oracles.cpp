#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

double digamma(double x) { return static_cast<double>(boost::math::digamma(big(x))); }
double trigamma(double x) { return static_cast<double>(boost::math::trigamma(big(x))); }
double polygamma(int n, double x) { return static_cast<double>(boost::math::polygamma(n, big(x))); }
double zeta(double s) { return static_cast<double>(boost::math::zeta(big(s))); }

namespace {

// B_2 .. B_24
constexpr long double kB[] = {1.0L / 6,          -1.0L / 30,      1.0L / 42,
                              -1.0L / 30,        5.0L / 66,       -691.0L / 2730,
                              7.0L / 6,          -3617.0L / 510,  43867.0L / 798,
                              -174611.0L / 330,  854513.0L / 138, -236364091.0L / 2730};
constexpr int kN = 40;

cplx npow(int n, cplx s) { return std::exp(-s * std::log(static_cast<long double>(n))); }

}  // namespace

cplx g_entire(cplx s) {
  const cplx one(1, 0);
  cplx sum(0, 0);
  for (int n = 1; n < kN; ++n) sum += npow(n, s);
  const cplx nS = npow(kN, s);
  sum += nS / 2.0L;
  // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  cplx rising = s;
  long double fact = 2;  // (2k)!
  long double npow_k = kN;  // N^{2k-1}
  for (int k = 1; k <= 12; ++k) {
    sum += kB[k - 1] / fact * rising * nS / npow_k;
    rising *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    fact *= (2 * k + 1) * (2 * k + 2);
    npow_k *= static_cast<long double>(kN) * kN;
  }
  return (s - one) * sum + nS * static_cast<long double>(kN);
}

cplx zeta_regular(cplx s) {
  const cplx d = s - cplx(1, 0);
  if (std::abs(d) < 1e-3L) {
    // short Laurent tail from the fitted coefficients keeps this well conditioned
    static const std::vector<long double> gam = stieltjes_laurent_fit(8, 32, 0.3L);
    cplx acc(0, 0), p(1, 0);
    long double fact = 1;
    for (std::size_t n = 0; n < gam.size(); ++n) {
      if (n) fact *= n;
      acc += (n % 2 ? -1.0L : 1.0L) * gam[n] / fact * p;
      p *= d;
    }
    return acc;
  }
  return (g_entire(s) - cplx(1, 0)) / d;
}

long double zeta_regular_derivative(double x, int k) {
  constexpr int M = 48;
  const long double r = std::abs(x - 1.0) < 0.25 ? 0.5L : std::min(0.5L, std::abs(x - 1.0L) / 2);
  cplx acc(0, 0);
  for (int j = 0; j < M; ++j) {
    const long double th = 2 * std::numbers::pi_v<long double> * (j + 0.5L) / M;
    const cplx e = std::polar(1.0L, th);
    acc += zeta_regular(cplx(x, 0) + r * e) / std::pow(e, k);
  }
  long double fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return (acc.real() / M) * fact / std::pow(r, k);
}

long double zeta_derivative(double x, int k) {
  long double fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  const long double regular = zeta_regular_derivative(x, k);
  const long double pole = (k % 2 ? -1.0L : 1.0L) * fact / std::pow(static_cast<long double>(x) - 1, k + 1);
  return regular + pole;
}

std::vector<long double> stieltjes_laurent_fit(int max_index, int points, long double radius) {
  // (s-1)zeta(s) - 1 = sum_{n>=0} (-1)^n gamma_n / n! (s-1)^{n+1}
  std::vector<long double> out;
  long double fact = 1;
  for (int n = 0; n <= max_index; ++n) {
    if (n) fact *= n;
    const int m = n + 1;
    cplx acc(0, 0);
    for (int j = 0; j < points; ++j) {
      const long double th = 2 * std::numbers::pi_v<long double> * j / points;
      const cplx e = std::polar(1.0L, th);
      acc += (g_entire(cplx(1, 0) + radius * e) - cplx(1, 0)) * std::conj(std::pow(e, m));
    }
    const long double c = acc.real() / points / std::pow(radius, m);
    out.push_back((n % 2 ? -1.0L : 1.0L) * c * fact);
  }
  return out;
}

long double eta_averaged(double s) {
  constexpr int n = 60;
  std::vector<long double> partial(n);
  long double acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc += (k % 2 ? 1.0L : -1.0L) * std::pow(static_cast<long double>(k), -static_cast<long double>(s));
    partial[k - 1] = acc;
  }
  // repeated pairwise averaging of partial sums
  for (int level = 0; level < n - 1; ++level) {
    for (int i = 0; i + 1 < n - level; ++i) partial[i] = (partial[i] + partial[i + 1]) / 2;
  }
  return partial[0];
}

namespace {

double horner(const std::vector<double>& c, double x) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

std::vector<double> bisection_roots(const std::vector<double>& c, double a, double b) {
  std::vector<double> coeffs = c;
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};
  std::vector<double> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * static_cast<double>(i));
  std::vector<double> cuts{a};
  for (double x : bisection_roots(d, a, b)) cuts.push_back(x);
  cuts.push_back(b);
  double scale = 0;
  for (double v : coeffs) scale = std::max(scale, std::abs(v));
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    double flo = horner(coeffs, lo), fhi = horner(coeffs, hi);
    // a critical point sitting on the axis is a multiple root
    if (i > 0 && std::abs(flo) <= 1e-12 * scale) {
      if (roots.empty() || std::abs(roots.back() - lo) > 1e-9) roots.push_back(lo);
      continue;
    }
    if (i + 1 < cuts.size() - 1 && std::abs(fhi) <= 1e-12 * scale) continue;
    if ((flo < 0) == (fhi < 0)) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = horner(coeffs, mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

RandomPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nlin(1, 4), mval(-9, 9), qsel(0, 2), qval(1, 6);
  std::vector<int> ms;
  const int k = nlin(rng);
  while (static_cast<int>(ms.size()) < k) {
    const int m = mval(rng);
    if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
  }
  std::vector<std::int64_t> p{1};
  auto mul = [&](std::vector<std::int64_t> f) {
    std::vector<std::int64_t> out(p.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += p[i] * f[j];
    p = std::move(out);
  };
  RandomPoly rp;
  for (int m : ms) {
    mul({-m, 2});
    rp.real_roots.push_back(m / 2.0);
  }
  const int q = qsel(rng);
  if (q == 1) mul({qval(rng), 0, 1});  // no real roots
  if (q == 2) {
    // x^2 - 3: irrational roots at +-sqrt(3), distinct from every m/2
    mul({-3, 0, 1});
    rp.real_roots.push_back(std::sqrt(3.0));
    rp.real_roots.push_back(-std::sqrt(3.0));
  }
  std::sort(rp.real_roots.begin(), rp.real_roots.end());
  rp.numer = std::move(p);
  return rp;
}

}  // namespace oracle
