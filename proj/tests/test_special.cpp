#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hmz/digamma.hpp"
#include "hmz/errors.hpp"
#include "support/oracles.hpp"

using namespace hmz;

namespace {
double log_point(int i, int n, double lo, double hi) {
  return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
}
}  // namespace

TEST_CASE("digamma matches the 50-digit reference") {
  for (int i = 0; i < 400; ++i) {
    const double x = log_point(i, 400, 1e-3, 1e4);
    const double ref = oracle::digamma(x);
    const EvalResult r = digamma(x);
    CHECK(std::abs(r.value - ref) <= 4e-15 * std::max(1.0, std::abs(ref)));
    // the reported error has to cover the observed one
    CHECK(std::abs(r.value - ref) <= r.est_error + 1e-15 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("trigamma and psi'' match the reference") {
  for (int i = 0; i < 200; ++i) {
    const double x = log_point(i, 200, 1e-2, 1e3);
    const double t = oracle::trigamma(x), p2 = oracle::polygamma(2, x);
    CHECK(std::abs(trigamma(x).value - t) <= 4e-15 * std::max(1.0, std::abs(t)));
    CHECK(std::abs(digamma2(x).value - p2) <= 4e-15 * std::max(1.0, std::abs(p2)));
  }
}

TEST_CASE("recurrences hold on a log grid") {
  for (int i = 0; i < 1000; ++i) {
    const double x = log_point(i, 1000, 0.1, 100.0);
    CHECK(std::abs(digamma(x + 1).value - digamma(x).value - 1 / x) <= 1e-12);
    CHECK(std::abs(trigamma(x + 1).value - trigamma(x).value + 1 / (x * x)) <= 1e-12);
  }
}

TEST_CASE("special values") {
  using std::numbers::ln2;
  CHECK(digamma(1.0).value == doctest::Approx(-kEulerGamma).epsilon(1e-15));
  CHECK(digamma(0.5).value == doctest::Approx(-kEulerGamma - 2 * ln2).epsilon(1e-15));
  CHECK(trigamma(1.0).value == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-15));
  CHECK(digamma2(1.0).value == doctest::Approx(-2.4041138063191885).epsilon(1e-14));
  CHECK(polygamma(1, 2.0).value == trigamma(2.0).value);
}

TEST_CASE("positive zero of psi") {
  const double x0 = digamma_zero().x0;
  CHECK(x0 == doctest::Approx(1.4616321449683623).epsilon(1e-14));
  CHECK(std::abs(digamma(x0).value) <= digamma(x0).est_error + 1e-15);
}

TEST_CASE("psi is increasing and concave") {
  double prev = digamma(0.01).value;
  for (int i = 1; i < 500; ++i) {
    const double x = log_point(i, 500, 0.01, 1e3);
    const double v = digamma(x).value;
    CHECK(v > prev);
    CHECK(trigamma(x).value > 0);
    CHECK(digamma2(x).value < 0);
    prev = v;
  }
}

TEST_CASE("harmonic mean") {
  CHECK(harmonic_mean(1, 1) == 1);
  CHECK(harmonic_mean(2, 6) == doctest::Approx(3));
  for (double a : {0.1, 0.5, 2.0, 17.0}) {
    const double h = harmonic_mean(a, 1 / a);
    CHECK(h > 0);
    CHECK(h <= 1);
  }
  CHECK_THROWS_AS(harmonic_mean(1, -1), HarmonicMeanPole);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
  CHECK_THROWS_AS(trigamma(std::nan("")), DomainError);
  CHECK_THROWS(polygamma(3, 1.0));
}
