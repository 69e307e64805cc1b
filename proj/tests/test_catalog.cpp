#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "hmz/catalog.hpp"
#include "hmz/digamma.hpp"
#include "hmz/errors.hpp"
#include "hmz/stieltjes.hpp"
#include "hmz/zeta.hpp"

using namespace hmz;

namespace {
double ev(ExprId id, double x, std::vector<double> p = {}) { return aux_eval(id, x, p).value; }
double H(double a, double b) { return 2 * a * b / (a + b); }
}  // namespace

TEST_CASE("catalog names are unique and parse back") {
  std::set<std::string_view> names;
  for (const auto& e : catalog()) {
    CHECK(names.insert(e.name).second);
    CHECK(parse_expr(e.name) == e.id);
    CHECK(expr_info(e.id).name == e.name);
  }
  CHECK(parse_expr("digamma") == ExprId::PSI);
  CHECK_FALSE(parse_expr("NOPE").has_value());
}

TEST_CASE("entries agree with their plain definitions") {
  const double g = kEulerGamma;
  for (double x : {0.2, 0.45, 0.8, 1.3, 2.0, 7.5}) {
    const double z = zeta(x).value, zi = zeta(1 / x).value, z1 = zeta(x, 1).value;
    const double hx = H(x, 1 / x);
    CHECK(ev(ExprId::THETA, x) == doctest::Approx(digamma(1 / hx).value));
    CHECK(ev(ExprId::U_DIG, x) == doctest::Approx(g / x + digamma(x).value));
    CHECK(ev(ExprId::PHI_SUM, x) == doctest::Approx(z + zi).epsilon(1e-12));
    CHECK(ev(ExprId::U_PROD, x) == doctest::Approx(z * zi).epsilon(1e-12));
    CHECK(ev(ExprId::RATIO_R, x) == doctest::Approx((z + zi) / (z * zi)).epsilon(1e-12));
    CHECK(ev(ExprId::HM_ZETA_INV, x) == doctest::Approx(H(z, zi)).epsilon(1e-12));
    CHECK(ev(ExprId::G_ZETA, x) ==
          doctest::Approx(x * z1 - zeta(1 / x, 1).value / x).epsilon(1e-10).scale(1));
    CHECK(ev(ExprId::G1, x) == doctest::Approx((x - 1) * z).epsilon(1e-12));
    CHECK(ev(ExprId::INV_ZETA, x) == doctest::Approx(1 / z).epsilon(1e-12));
    CHECK(ev(ExprId::ZETA_LOGDERIV, x) == doctest::Approx(z1 / z).epsilon(1e-12));
    CHECK(ev(ExprId::LOGABS_ZETA, x) == doctest::Approx(std::log(std::abs(z))));
    CHECK(ev(ExprId::H_AB, x, {1, 2}) == doctest::Approx(x * (x - 1) * (x - 1) * z).epsilon(1e-12));
    CHECK(ev(ExprId::CHAIN_HM, x) == doctest::Approx(-g * hx));
    CHECK(ev(ExprId::S_LEM, x, {3}) == doctest::Approx(x * x * std::log(3.0) / std::pow(3.0, x) - 1));
  }
  for (double x : {0.1, 0.3, 0.7, 0.95}) {
    const double a = zeta(x).value, b = zeta(1 - x).value;
    CHECK(ev(ExprId::HM_ZETA_REFL, x) == doctest::Approx(H(a, b)).epsilon(1e-12));
    CHECK(ev(ExprId::HM_ETA_REFL, x) == doctest::Approx(H(eta(x).value, eta(1 - x).value)).epsilon(1e-12));
    CHECK(ev(ExprId::REFL_PROD, x) == doctest::Approx(a * b).epsilon(1e-12));
    CHECK(ev(ExprId::G2, x) == doctest::Approx(x * (1 - x) * a * b).epsilon(1e-12));
    CHECK(ev(ExprId::H_PROD, x) == doctest::Approx(zeta(1 + x).value * zeta(1 - x).value).epsilon(1e-12));
  }
}

TEST_CASE("pole-free forms stay finite at s = 1") {
  CHECK(ev(ExprId::G_ZETA, 1.0) == doctest::Approx(0).scale(1));
  CHECK(ev(ExprId::PHI_SUM, 1.0) == doctest::Approx(2 * kEulerGamma - 1).epsilon(1e-13));
  CHECK(ev(ExprId::G1, 1.0) == doctest::Approx(1.0));
  CHECK(std::isfinite(ev(ExprId::VARPHI_RATIO, 1.0)));
  CHECK(ev(ExprId::VARPHI_RATIO, 1.0) == doctest::Approx(-std::log(std::numbers::ln2)).epsilon(1e-13));
}

TEST_CASE("symmetries") {
  for (double x : {0.05, 0.3, 0.77}) {
    CHECK(ev(ExprId::G_ZETA, 1 / x) == doctest::Approx(-ev(ExprId::G_ZETA, x)).epsilon(1e-10));
    CHECK(ev(ExprId::PHI_SUM, 1 / x) == doctest::Approx(ev(ExprId::PHI_SUM, x)).epsilon(1e-12));
    CHECK(ev(ExprId::HM_ZETA_REFL, 1 - x) == doctest::Approx(ev(ExprId::HM_ZETA_REFL, x)).epsilon(1e-12));
  }
}

TEST_CASE("series branch of VARPHI_RATIO joins the direct formula") {
  for (double t : {1e-5, 2e-5, -2e-5}) {
    const double x = 1 + t;
    const double direct = std::log(t / -std::expm1(-t * std::numbers::ln2));
    CHECK(ev(ExprId::VARPHI_RATIO, x) == doctest::Approx(direct).epsilon(1e-10));
  }
  // either side of the switch point
  const double a = ev(ExprId::VARPHI_RATIO, 1 + 1.4e-5);
  const double b = ev(ExprId::VARPHI_RATIO, 1 + 1.5e-5);
  CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("quintic bound and its analytic derivatives") {
  const double h = 1e-4;
  for (double x : {0.0, 0.3, 0.7}) {
    const double fd1 = (ev(ExprId::GB_QUINTIC, x + h) - ev(ExprId::GB_QUINTIC, x - h)) / (2 * h);
    const double fd2 = (ev(ExprId::GB_QUINTIC, x + h) - 2 * ev(ExprId::GB_QUINTIC, x) +
                        ev(ExprId::GB_QUINTIC, x - h)) / (h * h);
    CHECK(ev(ExprId::GB_QUINTIC_D1, x) == doctest::Approx(fd1).epsilon(1e-6));
    CHECK(ev(ExprId::GB_QUINTIC_D2, x) == doctest::Approx(fd2).epsilon(1e-4));
  }
}

TEST_CASE("errors carry the entry name") {
  try {
    aux_eval(ExprId::THETA, -1.0);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("THETA") != std::string::npos);
  }
  CHECK_THROWS_AS(aux_eval(ExprId::ZETA, 1.0), PoleError);
  CHECK_THROWS_AS(aux_eval(ExprId::H_AB, 2.0), DomainError);  // missing parameters
}
