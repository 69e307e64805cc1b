#include <doctest.h>

#include <cmath>

#include "hmz/errors.hpp"
#include "hmz/verifier.hpp"

using namespace hmz;

TEST_CASE("grid points lie strictly inside") {
  const GridSpec g{0, 1, 9, Spacing::Linear, 0.0, 0};
  const auto pts = g.points();
  REQUIRE(pts.size() == 9);
  CHECK(pts.front() == doctest::Approx(0.1));
  CHECK(pts.back() == doctest::Approx(0.9));
  const GridSpec lg{1, 1000, 2, Spacing::Log, 0.0, 0};
  const auto lp = lg.points();
  CHECK(lp[0] == doctest::Approx(10));
  CHECK(lp[1] == doctest::Approx(100));
  CHECK_THROWS_AS((GridSpec{1, 0, 5}.points()), DomainError);
  CHECK_THROWS_AS((GridSpec{0, 10, 5, Spacing::Log, 0.0}.points()), DomainError);
}

TEST_CASE("pointwise margins") {
  const Fn x2 = [](double x) { return x * x; };
  const Fn one = [](double) { return 1.0; };
  const ClaimReport r = check_pointwise("t", x2, Relation::Less, one, {0, 1, 100});
  CHECK(r.passed());
  CHECK(r.kind == CheckKind::POINTWISE);
  // margin 1 - x^2 is smallest at the right end
  CHECK(r.argmin_x > 0.98);
  CHECK(r.min_margin == doctest::Approx(1 - r.argmin_x * r.argmin_x));
  CHECK(r.min_margin > 0);

  const ClaimReport bad = check_pointwise("t", x2, Relation::Greater, one, {0, 2, 100});
  CHECK(bad.status == Status::Fail);
  CHECK(bad.min_margin < -0.9);

  // touching zero passes only the non-strict relation
  const Fn sq = [](double x) { return (x - 0.5) * (x - 0.5); };
  const Fn zero = [](double) { return 0.0; };
  CHECK(check_pointwise("t", sq, Relation::GreaterEq, zero, {0, 1, 101, Spacing::Linear, 0.0}).passed());
  CHECK_FALSE(check_pointwise("t", sq, Relation::Greater, zero, {0, 1, 101, Spacing::Linear, 0.0}).passed());
}

TEST_CASE("refinement finds a narrow dip between grid points") {
  // dip of depth 2 and width 1e-3 centred between two grid points
  const Fn f = [](double x) { return 1 - 2 * std::exp(-std::pow((x - 0.50495) / 1e-3, 2)); };
  const Fn zero = [](double) { return 0.0; };
  const ClaimReport r = check_pointwise("dip", f, Relation::Greater, zero, {0, 1, 100});
  CHECK(r.status == Status::Fail);
  CHECK(r.argmin_x == doctest::Approx(0.50495).epsilon(1e-3));
}

TEST_CASE("ties resolve to the smaller x") {
  const Fn c = [](double) { return 0.5; };
  const Fn one = [](double) { return 1.0; };
  const ClaimReport r = check_pointwise("t", c, Relation::Less, one, {0, 1, 10, Spacing::Linear, 0.0});
  CHECK(r.argmin_x == doctest::Approx(1.0 / 11).epsilon(1e-9));
}

TEST_CASE("monotone checks") {
  const Fn lg = [](double x) { return std::log(x); };
  CHECK(check_monotone("m", lg, {0.1, 10, 200}, 1).passed());
  CHECK_FALSE(check_monotone("m", lg, {0.1, 10, 200}, -1).passed());
  const Fn bump = [](double x) { return -(x - 0.7) * (x - 0.7); };
  const ClaimReport r = check_monotone("m", bump, {0, 1, 200}, 1);
  CHECK(r.status == Status::Fail);
  CHECK(r.argmin_x > 0.69);
}

TEST_CASE("convexity and refutation") {
  const Fn ex = [](double x) { return std::exp(x); };
  CHECK(check_convexity("c", ex, {-1, 1, 200}, Curvature::Convex).passed());
  CHECK_FALSE(check_convexity("c", ex, {-1, 1, 200}, Curvature::Concave).passed());
  // refuting concavity of exp succeeds; refuting its convexity does not
  CHECK(check_convexity("c", ex, {-1, 1, 200}, Curvature::Concave, {}, true).passed());
  CHECK_FALSE(check_convexity("c", ex, {-1, 1, 200}, Curvature::Convex, {}, true).passed());
  // sin has both signs of curvature on (0, 2pi)
  const Fn s = [](double x) { return std::sin(x); };
  const ClaimReport r = check_convexity("c", s, {0.1, 6.2, 300}, Curvature::Convex, {}, true);
  CHECK(r.passed());
  CHECK(r.min_margin > 0.9);
  CHECK(r.argmin_x == doctest::Approx(3.14159265 / 2).epsilon(0.05));
}

TEST_CASE("pole indicator skips points near sign changes") {
  const Fn inv = [](double x) { return 1 / (x - 0.5); };
  const Fn den = [](double x) { return x - 0.5; };
  const Fn lower = [](double) { return -1e9; };
  ScanOptions opts;
  opts.pole_indicator = den;
  // grid of 99 points hits x = 0.5 exactly
  const ClaimReport r = check_pointwise("p", lower, Relation::Less, inv, {0, 1, 99, Spacing::Linear, 0}, opts);
  CHECK(r.passed());
  CHECK(r.notes.find("pole") != std::string::npos);
}

TEST_CASE("harmonic-mean poles are skipped and counted") {
  const Fn f = [](double x) {
    if (std::abs(x - 0.5) < 1e-12) throw HarmonicMeanPole("f");
    return x;
  };
  const Fn hi = [](double) { return 2.0; };
  const ClaimReport r = check_pointwise("h", f, Relation::Less, hi, {0, 1, 99, Spacing::Linear, 0});
  CHECK(r.passed());
  CHECK(r.notes.find("1 singular point") != std::string::npos);
}

TEST_CASE("limits") {
  LimitSpec spec;
  spec.endpoint = 0;
  spec.side = 1;
  spec.expected = 1;
  const Fn sinc = [](double x) { return std::sin(x) / x; };
  CHECK(check_limit("l", sinc, spec).passed());
  spec.expected = 2;
  CHECK(check_limit("l", sinc, spec).status == Status::Fail);

  LimitSpec inf;
  inf.side = 0;
  inf.expected = 0;
  CHECK(check_limit("l", [](double x) { return 1 / x; }, inf).passed());

  LimitSpec wild;
  wild.endpoint = 0;
  wild.expected = 0;
  const ClaimReport osc = check_limit("l", [](double x) { return std::sin(1 / x); }, wild);
  CHECK(osc.status != Status::Pass);

  LimitSpec neg;
  neg.endpoint = 0;
  neg.expected = -std::numeric_limits<double>::infinity();
  CHECK(check_limit("l", [](double x) { return std::log(x) * 1e6; }, neg).passed());
}

TEST_CASE("root finding, values and identities") {
  CHECK(find_root([](double x) { return x * x - 2; }, 0, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1; }, 0, 2), BracketError);
  const ClaimReport v = check_value("v", 1.0005, 1.0, 1e-3, 0);
  CHECK(v.passed());
  CHECK(v.min_margin == doctest::Approx(5e-4));
  CHECK_FALSE(check_value("v", 1.01, 1.0, 1e-3, 0).passed());
  const Fn a = [](double x) { return std::sin(x) * std::sin(x); };
  const Fn b = [](double x) { return 1 - std::cos(x) * std::cos(x); };
  CHECK(check_identity("i", a, b, {0, 3, 50}, 1e-14).passed());
}

TEST_CASE("names") {
  CHECK(std::string(to_string(Status::Pass)) == "pass");
  CHECK(std::string(to_string(CheckKind::ROOT_COUNT)).size() > 0);
  CHECK(is_strict(Relation::Less));
  CHECK_FALSE(is_strict(Relation::GreaterEq));
}
