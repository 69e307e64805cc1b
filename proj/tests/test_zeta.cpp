#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hmz/errors.hpp"
#include "hmz/stieltjes.hpp"
#include "hmz/zeta.hpp"
#include "support/oracles.hpp"

using namespace hmz;
using std::numbers::pi;

TEST_CASE("zeta at known points") {
  CHECK(zeta(2).value == doctest::Approx(pi * pi / 6).epsilon(1e-15));
  CHECK(zeta(4).value == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-15));
  CHECK(zeta(0.5).value == doctest::Approx(-1.4603545088095868).epsilon(1e-14));
  CHECK(zeta(2, 1).value == doctest::Approx(-0.93754825431584375).epsilon(1e-14));
  CHECK(eta(1).value == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(eta(2).value == doctest::Approx(pi * pi / 12).epsilon(1e-15));
}

TEST_CASE("zeta matches the reference on (0, 30)") {
  for (int i = 1; i < 600; ++i) {
    const double s = 30.0 * i / 600;
    if (std::abs(s - 1) < 1e-6) continue;
    const double ref = oracle::zeta(s);
    const EvalResult r = zeta(s);
    CHECK(std::abs(r.value - ref) <= 1e-14 * std::max(1.0, std::abs(ref)));
    CHECK(std::abs(r.value - ref) <= r.est_error + 4e-16 * std::abs(ref));
  }
}

TEST_CASE("derivatives match a Cauchy-integral reference") {
  for (int k = 0; k <= kMaxDerivative; ++k) {
    for (int i = 1; i < 120; ++i) {
      const double x = 0.02 + 24.0 * i / 120;
      if (std::abs(x - 1) < 1e-3) continue;
      const double ref = static_cast<double>(oracle::zeta_derivative(x, k));
      CHECK(std::abs(zeta(x, k).value - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("eta is the alternating series") {
  for (int i = 1; i <= 100; ++i) {
    const double s = 0.2 * i;
    CHECK(std::abs(eta(s).value - static_cast<double>(oracle::eta_averaged(s))) <= 1e-14);
  }
}

TEST_CASE("eta-zeta identity") {
  for (int i = 1; i < 500; ++i) {
    const double s = 25.0 * i / 500;
    if (std::abs(s - 1) < 1e-6) continue;
    const double w = -std::expm1((1 - s) * std::numbers::ln2);
    CHECK(std::abs(eta(s).value - w * zeta(s).value) <= 1e-11);
    CHECK(std::abs(eta(s).value - w * oracle::zeta(s)) <= 1e-11);
  }
}

TEST_CASE("both zeta paths agree in the overlap annulus") {
  for (int k = 0; k <= 3; ++k) {
    for (int i = 0; i <= 200; ++i) {
      const double d = 0.05 + 0.19 * i / 200;
      for (double s : {1 - d, 1 + d}) {
        const double a = zeta_eta_path(s, k).value, b = laurent_zeta(s, k).value;
        CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
      }
    }
  }
}

TEST_CASE("regular part is continuous through s = 1") {
  for (int k = 0; k <= 3; ++k) {
    const double at1 = zeta_regular(1.0, k).value;
    // value at 1 is (-1)^k gamma_k
    CHECK(at1 == doctest::Approx((k % 2 ? -1 : 1) * stieltjes(k)).epsilon(1e-13));
    for (double t : {1e-6, 1e-3, 0.1, 0.24, 0.26, 0.5}) {
      for (double s : {1 - t, 1 + t}) {
        const double ref = static_cast<double>(oracle::zeta_regular_derivative(s, k));
        CHECK(std::abs(zeta_regular(s, k).value - ref) <= 1e-12 * std::pow(1 / t, k));
      }
    }
  }
}

TEST_CASE("Laurent tail bound dominates the truncation error") {
  LaurentConfig few{0.25, 6};
  for (int k = 0; k <= 3; ++k) {
    for (double d : {0.05, 0.15, 0.24}) {
      const double s = 1 + d;
      const double err = std::abs(laurent_zeta(s, k, few).value - zeta_eta_path(s, k).value);
      CHECK(err <= laurent_tail_bound(few, d, k) + 1e-12);
    }
  }
}

TEST_CASE("pole guard and domain") {
  CHECK_THROWS_AS(zeta(1.0), PoleError);
  CHECK_THROWS_AS(zeta(1 + 1e-9), PoleError);
  CHECK_NOTHROW(zeta(1 + 1e-7));
  CHECK_THROWS_AS(zeta(0.0), DomainError);
  CHECK_THROWS_AS(eta(-0.5), DomainError);
  CHECK_THROWS(zeta(2.0, 4));
  CHECK_THROWS_AS(laurent_zeta(1.5, 0), DomainError);
}

TEST_CASE("Stieltjes table against reference digits") {
  const double ref[] = {0.57721566490153286,   -0.072815845483676725, -0.0096903631928723185,
                        0.0020538344203033459, 0.0023253700654673000, 0.00079332381730106270,
                        -0.00023876934543019961};
  for (int n = 0; n <= 6; ++n) CHECK(stieltjes(n) == doctest::Approx(ref[n]).epsilon(1e-15));
  const auto& t = stieltjes_table();
  CHECK(t.max_index() >= 20);
  for (std::size_t n = 0; n < t.size(); ++n) {
    CHECK(t.prec[n] < 1e-20);
    CHECK(t.decimal[n].size() >= 40);
  }
  CHECK_THROWS_AS(stieltjes(static_cast<int>(t.max_index()) + 1), UnsupportedError);
}

TEST_CASE("Stieltjes values agree with a Laurent fit") {
  const auto fit = oracle::stieltjes_laurent_fit(6);
  for (int n = 0; n <= 6; ++n) CHECK(std::abs(static_cast<double>(fit[n]) - stieltjes(n)) <= 1e-8);
}

TEST_CASE("Stieltjes bounds") {
  CHECK(stieltjes_bound(1) == doctest::Approx(2 / pi));
  CHECK(stieltjes_bound(2) == doctest::Approx(4 / (pi * pi)));
  CHECK(lavrik_bound(1) == doctest::Approx(0.25));
  CHECK_THROWS_AS(stieltjes_bound(0), UnsupportedError);
  for (int n = 1; n <= 10; ++n) {
    CHECK(std::abs(stieltjes(n)) <= stieltjes_bound(n));
    CHECK(std::abs(stieltjes(n)) <= lavrik_bound(n));
  }
}

TEST_CASE("Stieltjes cache round trip") {
  std::stringstream ss;
  write_stieltjes_cache(stieltjes_table(), ss);
  const StieltjesTable back = read_stieltjes_cache(ss);
  REQUIRE(back.size() == stieltjes_table().size());
  for (std::size_t n = 0; n < back.size(); ++n) {
    CHECK(back.gamma[n] == stieltjes_table().gamma[n]);
    CHECK(back.prec[n] == doctest::Approx(stieltjes_table().prec[n]));
  }
  std::stringstream bad("0 0.577 1e-40\n2 oops 1e-40\n");
  CHECK_THROWS(read_stieltjes_cache(bad));
}

TEST_CASE("small oracle run converges") {
  StieltjesOracleOptions opts;
  opts.cutoffs = {2000, 5000};
  const StieltjesTable t = compute_stieltjes_table(4, opts);
  for (int n = 0; n <= 4; ++n) {
    CHECK(std::abs(t.gamma[n] - stieltjes(n)) <= t.prec[n] + 1e-16);
  }
}

TEST_CASE("sandwich brackets") {
  CHECK_THROWS_AS(zeta_sandwich(5, 0.5), UnsupportedError);
  CHECK_THROWS_AS(zeta_sandwich(0, 1.0), DomainError);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i < 100; ++i) {
      const double x = i / 100.0;
      const Bracket b = zeta_sandwich(n, x);
      const double v = (n % 2 ? -1 : 1) * zeta(x, n).value;
      CHECK(b.lo <= v);
      CHECK(v <= b.hi);
    }
  }
}
