#include "hmz/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hmz/errors.hpp"
#include "hmz/stieltjes.hpp"

namespace hmz {
namespace {

using ld = long double;

constexpr int kAccelTerms = 50;
constexpr int kHead = 2;  // n = 1, 2 summed exactly
constexpr ld kEpsLd = std::numeric_limits<ld>::epsilon();
constexpr ld kLn2 = 0.693147180559945309417232121458176568L;

struct EtaAll {
  std::array<ld, kMaxDerivative + 1> value{};
  std::array<ld, kMaxDerivative + 1> error{};
};

struct AccelWeights {
  std::array<ld, kAccelTerms> c{};
  ld d = 0;
};

// Cohen-Rodriguez Villegas-Zagier weights: sum_{j>=0} (-1)^j b_j is
// approximated by sum_j c_j b_j / d with relative error about 2/d for
// moment sequences.
const AccelWeights& accel_weights() {
  static const AccelWeights w = [] {
    AccelWeights out;
    const ld n = kAccelTerms;
    ld d = std::pow(3.0L + std::sqrt(8.0L), n);
    d = (d + 1.0L / d) / 2.0L;
    ld b = -1.0L;
    ld c = -d;
    for (int k = 0; k < kAccelTerms; ++k) {
      c = b - c;
      out.c[k] = c;
      b = (k + n) * (k - n) * b / ((k + 0.5L) * (k + 1.0L));
    }
    out.d = d;
    return out;
  }();
  return w;
}

const std::array<ld, kAccelTerms + kHead + 1>& log_table() {
  static const auto table = [] {
    std::array<ld, kAccelTerms + kHead + 1> t{};
    for (std::size_t n = 1; n < t.size(); ++n) t[n] = std::log(static_cast<ld>(n));
    return t;
  }();
  return table;
}

// eta^(j)(s) for j = 0..max_order: sum_{n>=1} (-1)^{n+1} (-log n)^j n^{-s}.
EtaAll eta_all(ld s, int max_order) {
  const auto& w = accel_weights();
  const auto& logs = log_table();
  EtaAll out;
  std::array<ld, kMaxDerivative + 1> head_abs{};
  std::array<ld, kMaxDerivative + 1> tail_abs{};
  std::array<ld, kMaxDerivative + 1> tail_max{};
  for (int n = 1; n <= kHead; ++n) {
    const ld sign = (n % 2 == 1) ? 1.0L : -1.0L;
    const ld base = std::exp(-s * logs[n]);
    ld pw = 1.0L;
    for (int j = 0; j <= max_order; ++j) {
      const ld t = sign * pw * base;
      out.value[j] += t;
      head_abs[j] += std::abs(t);
      pw *= -logs[n];
    }
  }
  std::array<ld, kMaxDerivative + 1> tail{};
  for (int k = 0; k < kAccelTerms; ++k) {
    const int n = k + kHead + 1;  // n = 3 carries sign +1
    const ld base = std::exp(-s * logs[n]);
    ld pw = 1.0L;
    for (int j = 0; j <= max_order; ++j) {
      const ld b = pw * base;
      tail[j] += w.c[k] * b;
      tail_abs[j] += std::abs(w.c[k] * b);
      tail_max[j] = std::max(tail_max[j], std::abs(b));
      pw *= -logs[n];
    }
  }
  for (int j = 0; j <= max_order; ++j) {
    out.value[j] += tail[j] / w.d;
    out.error[j] = 3.0L * tail_max[j] / w.d +
                   8.0L * kEpsLd * (head_abs[j] + tail_abs[j] / w.d);
  }
  return out;
}

void check_order(int k, const char* name) {
  if (k < 0 || k > kMaxDerivative) {
    throw UnsupportedError(std::string(name) + ": derivative order must be 0..3");
  }
}

void check_positive(double s, const char* name) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError(std::string(name) + ": requires finite s > 0");
  }
}

EvalResult to_result(ld value, ld error) {
  const double v = static_cast<double>(value);
  return {v, static_cast<double>(error) + 0.5 * kEps * std::abs(v)};
}

constexpr std::array<std::array<int, 4>, 4> kBinom = {
    {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}};

struct SeriesPart {
  ld value = 0.0L;
  ld magnitude = 0.0L;
  ld error = 0.0L;
};

SeriesPart regular_series(double t, int k, const LaurentConfig& cfg);

}  // namespace

double laurent_tail_bound(const LaurentConfig& cfg, double dist, int order) {
  check_order(order, "laurent_tail_bound");
  if (!(dist >= 0.0)) throw DomainError("laurent_tail_bound: negative distance");
  if (dist >= std::numbers::pi) {
    return std::numeric_limits<double>::infinity();
  }
  // sum_{n > N} B_n / (n - k)! dist^{n - k} with B_n the even/odd bound.
  double total = 0.0;
  const double log_pi = std::log(std::numbers::pi);
  for (int n = std::max(cfg.terms + 1, 1); n < cfg.terms + 2000; ++n) {
    const double c = (n % 2 == 0) ? 4.0 : 2.0;
    const int p = n - order;
    double log_term = std::log(c) + std::lgamma(static_cast<double>(n)) -
                      n * log_pi - std::lgamma(p + 1.0);
    if (p > 0) {
      if (dist == 0.0) continue;
      log_term += p * std::log(dist);
    }
    const double term = std::exp(log_term);
    total += term;
    if (term < 1e-40 * std::max(total, 1e-300) && n > cfg.terms + 5) break;
  }
  return total;
}

EvalResult eta(double s, int k) {
  check_positive(s, "eta");
  check_order(k, "eta");
  const EtaAll all = eta_all(s, k);
  return to_result(all.value[k], all.error[k]);
}

EvalResult zeta_eta_path(double s, int k) {
  check_positive(s, "zeta");
  check_order(k, "zeta");
  if (std::abs(s - 1.0) < kPoleGuard) {
    throw PoleError("zeta: |s - 1| < 1e-8 (simple pole at s = 1)");
  }
  const EtaAll e = eta_all(s, k);
  const ld q = std::exp2(static_cast<ld>(1.0L - s));
  const ld w0 = -std::expm1((1.0L - s) * kLn2);  // 1 - 2^{1-s}
  const ld w1 = kLn2 * q;
  const ld w2 = -kLn2 * kLn2 * q;
  const ld w3 = kLn2 * kLn2 * kLn2 * q;
  std::array<ld, 4> D{};
  D[0] = 1.0L / w0;
  D[1] = -w1 / (w0 * w0);
  D[2] = 2.0L * w1 * w1 / (w0 * w0 * w0) - w2 / (w0 * w0);
  D[3] = -6.0L * w1 * w1 * w1 / (w0 * w0 * w0 * w0) +
         6.0L * w1 * w2 / (w0 * w0 * w0) - w3 / (w0 * w0);
  ld value = 0.0L;
  ld error = 0.0L;
  ld mag = 0.0L;
  for (int j = 0; j <= k; ++j) {
    const ld t = kBinom[k][j] * e.value[j] * D[k - j];
    value += t;
    mag += std::abs(t);
    error += kBinom[k][j] * e.error[j] * std::abs(D[k - j]);
  }
  // relative rounding in D grows like 1/w0
  error += 16.0L * kEpsLd * mag * (1.0L + 1.0L / std::abs(w0));
  return to_result(value, error);
}

namespace {

// sum_{n>=k} gamma_n/(n-k)! (-1)^k (1-s)^{n-k} with t = s - 1, plus its
// truncation and coefficient error.
SeriesPart regular_series(double t, int k, const LaurentConfig& cfg) {
  const auto& table = stieltjes_table();
  if (static_cast<std::size_t>(cfg.terms) > table.max_index()) {
    throw UnsupportedError("laurent_zeta: table shorter than configured terms");
  }
  const ld u = -static_cast<ld>(t);
  ld series = 0.0L, mag = 0.0L, coeff_err = 0.0L;
  ld upow = 1.0L;
  ld inv_fact = 1.0L;  // 1/(n-k)!
  for (int n = k; n <= cfg.terms; ++n) {
    const int p = n - k;
    if (p > 0) {
      upow *= u;
      inv_fact /= p;
    }
    const ld term = table.gamma[n] * inv_fact * upow;
    series += term;
    mag += std::abs(term);
    coeff_err += table.prec[n] * inv_fact * std::abs(upow);
  }
  const ld sign_k = (k % 2 == 0) ? 1.0L : -1.0L;
  SeriesPart out;
  out.value = sign_k * series;
  out.magnitude = mag;
  // tail bound, table uncertainty, and the double-precision table entries
  out.error = static_cast<ld>(laurent_tail_bound(cfg, std::abs(t), k)) + coeff_err +
              2.0L * static_cast<ld>(kEps) * mag;
  return out;
}

}  // namespace

EvalResult laurent_zeta(double s, int k, const LaurentConfig& cfg) {
  check_order(k, "laurent_zeta");
  const double t = s - 1.0;
  const double dist = std::abs(t);
  if (!(dist < cfg.radius)) {
    throw DomainError("laurent_zeta: |s - 1| must be below the disc radius");
  }
  if (dist < kPoleGuard) {
    throw PoleError("zeta: |s - 1| < 1e-8 (simple pole at s = 1)");
  }
  // pole part: d^k/ds^k (s-1)^{-1} = (-1)^k k! (s-1)^{-(k+1)}
  ld fact = 1.0L;
  for (int i = 2; i <= k; ++i) fact *= i;
  const ld sign_k = (k % 2 == 0) ? 1.0L : -1.0L;
  const ld pole = sign_k * fact / std::pow(static_cast<ld>(t), k + 1);
  const SeriesPart reg = regular_series(t, k, cfg);
  const ld error = reg.error + 4.0L * kEpsLd * (std::abs(pole) + reg.magnitude);
  return to_result(pole + reg.value, error);
}

EvalResult zeta(double s, int k) {
  check_positive(s, "zeta");
  check_order(k, "zeta");
  static const LaurentConfig cfg{};
  if (std::abs(s - 1.0) < kPoleGuard) {
    throw PoleError("zeta: |s - 1| < 1e-8 (simple pole at s = 1)");
  }
  if (std::abs(s - 1.0) < cfg.radius) return laurent_zeta(s, k, cfg);
  return zeta_eta_path(s, k);
}

EvalResult zeta_regular(double s, int k) {
  check_positive(s, "zeta_regular");
  check_order(k, "zeta_regular");
  static const LaurentConfig cfg{};
  const double t = s - 1.0;
  if (std::abs(t) < cfg.radius) {
    const SeriesPart reg = regular_series(t, k, cfg);
    return to_result(reg.value, reg.error);
  }
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  const double pole = ((k % 2 == 0) ? 1.0 : -1.0) * fact / std::pow(t, k + 1);
  return zeta_eta_path(s, k) - EvalResult(pole, kEps * std::abs(pole));
}

Bracket zeta_sandwich(int n, double x) {
  if (n < 0 || n > 4) throw UnsupportedError("zeta_sandwich: order must be 0..4");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("zeta_sandwich: requires 0 < x < 1");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  const double left = f / std::pow(1.0 - x, n + 1);
  const double right = f / std::pow(1.0 + x, n + 1);
  return {-sgn * left - right, right - sgn * left};
}

}  // namespace hmz
