#include "hmz/registry.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "hmz/catalog.hpp"
#include "hmz/digamma.hpp"
#include "hmz/errors.hpp"
#include "hmz/named_polys.hpp"
#include "hmz/stieltjes.hpp"
#include "hmz/sturm.hpp"
#include "hmz/zeta.hpp"

namespace hmz {
namespace {

using std::numbers::pi;
constexpr double kG = kEulerGamma;
constexpr double kInf = std::numeric_limits<double>::infinity();

Fn E(ExprId id) {
  return [id](double x) { return aux_eval(id, x).value; };
}
Fn EP(ExprId id, std::vector<double> params) {
  return [id, params](double x) { return aux_eval(id, x, params).value; };
}
Fn C(double c) {
  return [c](double) { return c; };
}
Fn log_abs_of(Fn f) {
  return [f](double x) { return std::log(std::abs(f(x))); };
}
Fn zeta_k(int k) {
  return [k](double x) { return zeta(x, k).value; };
}
Fn zreg(int k) {
  return [k](double x) { return zeta_regular(x, k).value; };
}
double gm(int n) { return stieltjes(n); }

struct Dom {
  double a;
  double b;
  Spacing spacing = Spacing::Linear;
  double eps = 1e-4;
};

GridSpec grid(const SuiteOptions& o, const Dom& d) { return {d.a, d.b, o.grid_n, d.spacing, d.eps, 6}; }

ScanOptions scan(const SuiteOptions& o, Fn poles = {}) {
  ScanOptions s;
  s.margin_floor = o.margin_floor;
  s.pole_indicator = std::move(poles);
  return s;
}

std::string fmt(double v, int digits = 10) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

CheckDef pointwise(std::string id, std::string stmt, Fn lhs, Relation rel, Fn rhs, Dom d,
                   Fn poles = {}) {
  CheckDef c{id, stmt, nullptr};
  c.run = [=](const SuiteOptions& o) {
    ClaimReport r = check_pointwise(id, lhs, rel, rhs, grid(o, d), scan(o, poles));
    r.statement = stmt;
    return r;
  };
  return c;
}

CheckDef monotone(std::string id, std::string stmt, Fn f, int dir, Dom d) {
  CheckDef c{id, stmt, nullptr};
  c.run = [=](const SuiteOptions& o) {
    ClaimReport r = check_monotone(id, f, grid(o, d), dir, scan(o));
    r.statement = stmt;
    return r;
  };
  return c;
}

CheckDef curvature(std::string id, std::string stmt, Fn f, Curvature cv, Dom d,
                   bool refute = false) {
  CheckDef c{id, stmt, nullptr};
  c.run = [=](const SuiteOptions& o) {
    ClaimReport r = check_convexity(id, f, grid(o, d), cv, scan(o), refute);
    r.statement = stmt;
    return r;
  };
  return c;
}

CheckDef limit(std::string id, std::string stmt, Fn f, double endpoint, int side,
               double expected, double tol = 1e-3) {
  CheckDef c{id, stmt, nullptr};
  c.run = [=](const SuiteOptions&) {
    LimitSpec spec;
    spec.endpoint = endpoint;
    spec.side = side;
    spec.expected = expected;
    spec.tol = tol;
    ClaimReport r = check_limit(id, f, spec);
    r.statement = stmt;
    return r;
  };
  return c;
}

CheckDef value(std::string id, std::string stmt, std::function<double()> v, double expected,
               double tol, double at) {
  CheckDef c{id, stmt, nullptr};
  c.run = [=](const SuiteOptions&) {
    ClaimReport r = check_value(id, v(), expected, tol, at);
    r.statement = stmt;
    return r;
  };
  return c;
}

// value compared against an expected value that itself needs computing
CheckDef identity_at(std::string id, std::string stmt, std::function<double()> lhs,
                     std::function<double()> rhs, double tol, double at, bool relative = false) {
  CheckDef c{id, stmt, nullptr};
  c.run = [=](const SuiteOptions&) {
    const double l = lhs(), r0 = rhs();
    const double scale = relative ? std::abs(r0) : 1.0;
    ClaimReport r = check_value(id, l, r0, tol * scale, at);
    r.statement = stmt;
    if (relative) r.notes += " (relative tolerance " + fmt(tol, 3) + ")";
    return r;
  };
  return c;
}

// ---------------------------------------------------------------- digamma

std::vector<ClaimDef> digamma_claims() {
  std::vector<ClaimDef> out;
  const Fn chain[5] = {C(-kG), E(ExprId::CHAIN_HM), E(ExprId::CHAIN_PSI_HM), E(ExprId::THETA),
                       E(ExprId::SIGMA)};
  const char* names[5] = {"-gamma", "-gamma H(x,1/x)", "gamma^2/psi(H(x,1/x))",
                          "psi(1/H(x,1/x))", "H(psi(x),psi(1/x))"};
  const Dom left{0.001, 0.99, Spacing::Log};
  const Dom right{1.0 / 0.99, 1000.0, Spacing::Log};
  // sign changes of psi(x) + psi(1/x) are poles of SIGMA
  const Fn sigma_den = [](double x) { return digamma(x).value + digamma(1.0 / x).value; };
  for (int k = 1; k <= 4; ++k) {
    ClaimDef c;
    c.id = "D" + std::to_string(k);
    c.group = "digamma-harmonic-mean-chain";
    c.statement = std::string(names[k - 1]) + " < " + names[k] + " for x > 0, x != 1";
    const Fn poles = k == 4 ? sigma_den : Fn{};
    c.checks.push_back(pointwise(c.id + ".left", c.statement + " on (0,1)", chain[k - 1],
                                 Relation::Less, chain[k], left, poles));
    c.checks.push_back(pointwise(c.id + ".right", c.statement + " on (1,inf)", chain[k - 1],
                                 Relation::Less, chain[k], right, poles));
    if (k == 1) {
      const Fn spread = [chain](double x) {
        double m = 0;
        for (const auto& f : chain) m = std::max(m, std::abs(f(x) + kG));
        return m;
      };
      c.checks.push_back(limit("D1.limit_left", "all chain members -> -gamma as x -> 1-", spread,
                               1.0, -1, 0.0));
      c.checks.push_back(limit("D1.limit_right", "all chain members -> -gamma as x -> 1+",
                               spread, 1.0, 1, 0.0));
    }
    out.push_back(std::move(c));
  }

  {
    ClaimDef c{"D5", "theta-monotone-zero",
               "theta(x) = psi(1/H(x,1/x)) decreases on (0,1), increases on (1,inf), "
               "unique zero x1 < 1/x0",
               {}};
    c.checks.push_back(monotone("D5.decreasing", "theta strictly decreasing on (0,1)",
                                E(ExprId::THETA), -1, {0.001, 1.0, Spacing::Log}));
    c.checks.push_back(monotone("D5.increasing", "theta strictly increasing on (1,inf)",
                                E(ExprId::THETA), 1, {1.0, 1000.0, Spacing::Log}));
    CheckDef root{"D5.zero", "theta(x1) = 0 with x1 in (0, 1/x0)", nullptr};
    root.run = [](const SuiteOptions&) {
      const double x1 = find_root(E(ExprId::THETA), 0.01, 1.0);
      const double bound = 1.0 / digamma_zero().x0;
      ClaimReport r;
      r.id = "D5.zero";
      r.kind = CheckKind::ROOT_LOCATE;
      r.domain_a = 0.01;
      r.domain_b = 1.0;
      r.min_margin = bound - x1;
      r.argmin_x = x1;
      r.points = 1;
      r.status = r.min_margin > 0 ? Status::Pass : Status::Fail;
      r.statement = "theta(x1) = 0 with x1 in (0, 1/x0)";
      r.notes = "x1 = " + fmt(x1, 15) + ", 1/x0 = " + fmt(bound, 15);
      return r;
    };
    c.checks.push_back(root);
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"D6", "u-digamma-monotone", "u(y) = gamma/y + psi(y) increasing; u < 0 on (0,1)", {}};
    c.checks.push_back(monotone("D6.increasing", "u strictly increasing on (0,inf)",
                                E(ExprId::U_DIG), 1, {0.01, 100.0, Spacing::Log}));
    c.checks.push_back(pointwise("D6.negative", "u(y) < 0 on (0,1)", E(ExprId::U_DIG),
                                 Relation::Less, C(0.0), {0.001, 1.0, Spacing::Log}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"D7", "trigamma-square-inequality", "psi'(x)^2 + psi''(x) >= 0 on (0,100)", {}};
    c.checks.push_back(pointwise("D7.nonnegative", c.statement, E(ExprId::PSI_DET),
                                 Relation::GreaterEq, C(0.0), {0.001, 100.0, Spacing::Log}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"D8", "reciprocal-digamma-concave", "1/psi strictly concave on (1/x0, x0)", {}};
    CheckDef chk{"D8.concave", c.statement, nullptr};
    chk.run = [](const SuiteOptions& o) {
      const double x0 = digamma_zero().x0;
      ClaimReport r = check_convexity("D8.concave", E(ExprId::TAU_DIG),
                                      grid(o, {1.0 / x0, x0, Spacing::Linear, 1e-3}),
                                      Curvature::Concave, scan(o));
      r.statement = "1/psi strictly concave on (1/x0, x0)";
      return r;
    };
    c.checks.push_back(chk);
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"D9", "digamma-product-bound", "psi(y) psi(1/y) < gamma^2 for y > 0, y != 1", {}};
    c.checks.push_back(pointwise("D9.left", c.statement + " on (0,1)", E(ExprId::PSI_PROD),
                                 Relation::Less, C(kG * kG), {0.001, 0.999, Spacing::Log}));
    c.checks.push_back(pointwise("D9.right", c.statement + " on (1,inf)", E(ExprId::PSI_PROD),
                                 Relation::Less, C(kG * kG), {1.001, 1000.0, Spacing::Log}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"D10", "digamma-limits", "x psi(x) -> -1 as x -> 0+; psi(x)/log x -> 1 as x -> inf", {}};
    c.checks.push_back(limit("D10.x_psi", "x psi(x) -> -1 as x -> 0+", E(ExprId::X_PSI), 0.0, 1,
                             -1.0));
    c.checks.push_back(limit("D10.psi_over_log", "psi(x)/log x -> 1 as x -> inf",
                             E(ExprId::PSI_OVER_LOG), 0.0, 0, 1.0));
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- zeta

std::vector<ClaimDef> zeta_claims() {
  std::vector<ClaimDef> out;
  const Dom unit{0.0, 1.0};
  const Dom unit_log{0.001, 1.0, Spacing::Log};
  const Dom above_log{1.0, 1000.0, Spacing::Log};
  const Fn z = zeta_k(0), z1 = zeta_k(1), z2 = zeta_k(2);

  {
    ClaimDef c{"Z1", "zeta-reciprocal-sum",
               "R(x) = (zeta(x)+zeta(1/x))/(zeta(x)zeta(1/x)) increases on (0,1), decreases "
               "on (1,inf); R -> -1 at 0+, R -> 0 at 1",
               {}};
    c.checks.push_back(monotone("Z1.increasing", "R strictly increasing on (0,1)",
                                E(ExprId::RATIO_R), 1, unit_log));
    c.checks.push_back(monotone("Z1.decreasing", "R strictly decreasing on (1,inf)",
                                E(ExprId::RATIO_R), -1, above_log));
    c.checks.push_back(limit("Z1.limit_zero", "R(x) -> -1 as x -> 0+", E(ExprId::RATIO_R), 0.0,
                             1, -1.0));
    c.checks.push_back(limit("Z1.limit_one_left", "R(x) -> 0 as x -> 1-", E(ExprId::RATIO_R),
                             1.0, -1, 0.0));
    c.checks.push_back(limit("Z1.limit_one_right", "R(x) -> 0 as x -> 1+", E(ExprId::RATIO_R),
                             1.0, 1, 0.0));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z2", "zeta-reciprocal-sum",
               "H(zeta(x), zeta(1/x)) < -2 for x > 0, x != 1; -> -2 as x -> 0+", {}};
    c.checks.push_back(pointwise("Z2.left", "H(zeta(x),zeta(1/x)) < -2 on (0,1)",
                                 E(ExprId::HM_ZETA_INV), Relation::Less, C(-2.0),
                                 {0.0, 1.0, Spacing::Log}));
    c.checks.push_back(pointwise("Z2.right", "H(zeta(x),zeta(1/x)) < -2 on (1,inf)",
                                 E(ExprId::HM_ZETA_INV), Relation::Less, C(-2.0), above_log));
    c.checks.push_back(limit("Z2.limit_zero", "H(zeta(x),zeta(1/x)) -> -2 as x -> 0+",
                             E(ExprId::HM_ZETA_INV), 0.0, 1, -2.0));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z3", "eta-concave-bounds", "eta concave, eta' > 0 and 1/2 < eta < 1 on (0,inf)", {}};
    const Dom d{0.001, 25.0};
    c.checks.push_back(curvature("Z3.concave", "eta strictly concave", E(ExprId::ETA),
                                 Curvature::Concave, d));
    c.checks.push_back(pointwise("Z3.increasing", "eta'(s) > 0", E(ExprId::ETA_D1),
                                 Relation::Greater, C(0.0), d));
    c.checks.push_back(pointwise("Z3.lower", "eta(s) > 1/2", E(ExprId::ETA), Relation::Greater,
                                 C(0.5), d));
    c.checks.push_back(pointwise("Z3.upper", "eta(s) < 1", E(ExprId::ETA), Relation::Less,
                                 C(1.0), d));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z4", "eta-concave-bounds", "zeta < 0 and zeta' < 0 on (0,1)", {}};
    c.checks.push_back(pointwise("Z4.negative", "zeta(s) < 0 on (0,1)", z, Relation::Less,
                                 C(0.0), unit));
    c.checks.push_back(pointwise("Z4.decreasing", "zeta'(s) < 0 on (0,1)", z1, Relation::Less,
                                 C(0.0), unit));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z5", "zeta-complete-monotonicity",
               "(-1)^n zeta^(n) > 0 on (1,inf) and zeta^(n) < 0 on (0,1), n <= 3", {}};
    for (int n = 0; n <= 3; ++n) {
      const double s = n % 2 == 0 ? 1.0 : -1.0;
      const Fn signed_d = [n, s](double x) { return s * zeta(x, n).value; };
      const std::string ns = std::to_string(n);
      c.checks.push_back(pointwise("Z5.right_n" + ns, "(-1)^" + ns + " zeta^(" + ns + ") > 0 on (1,inf)",
                                   signed_d, Relation::Greater, C(0.0), {1.0, 25.0}));
      c.checks.push_back(pointwise("Z5.left_n" + ns, "zeta^(" + ns + ") < 0 on (0,1)",
                                   zeta_k(n), Relation::Less, C(0.0), unit));
    }
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z6", "zeta-complete-monotonicity",
               "-(-1)^n n!/(1-x)^(n+1) - n!/(1+x)^(n+1) <= (-1)^n zeta^(n)(x) <= n!/(1+x)^(n+1) "
               "- (-1)^n n!/(1-x)^(n+1) on (0,1), n <= 3",
               {}};
    for (int n = 0; n <= 3; ++n) {
      const double s = n % 2 == 0 ? 1.0 : -1.0;
      const Fn mid = [n, s](double x) { return s * zeta(x, n).value; };
      const Fn lo = [n](double x) { return zeta_sandwich(n, x).lo; };
      const Fn hi = [n](double x) { return zeta_sandwich(n, x).hi; };
      const std::string ns = std::to_string(n);
      c.checks.push_back(pointwise("Z6.lower_n" + ns, "lower bracket <= (-1)^n zeta^(n), n=" + ns,
                                   lo, Relation::LessEq, mid, {0.01, 0.99}));
      c.checks.push_back(pointwise("Z6.upper_n" + ns, "(-1)^n zeta^(n) <= upper bracket, n=" + ns,
                                   mid, Relation::LessEq, hi, {0.01, 0.99}));
    }
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z7", "zeta-complete-monotonicity",
               "g(x) = x zeta'(x) - zeta'(1/x)/x: g < 0 on (0,1), g > 0 on (1,inf), g -> 0 at 1, "
               "g(1/x) = -g(x)",
               {}};
    c.checks.push_back(pointwise("Z7.left", "g(x) < 0 on (0,1)", E(ExprId::G_ZETA),
                                 Relation::Less, C(0.0), unit_log));
    c.checks.push_back(pointwise("Z7.right", "g(x) > 0 on (1,inf)", E(ExprId::G_ZETA),
                                 Relation::Greater, C(0.0), above_log));
    c.checks.push_back(limit("Z7.limit_left", "g(x) -> 0 as x -> 1-", E(ExprId::G_ZETA), 1.0, -1, 0.0));
    c.checks.push_back(limit("Z7.limit_right", "g(x) -> 0 as x -> 1+", E(ExprId::G_ZETA), 1.0, 1, 0.0));
    CheckDef anti{"Z7.antisymmetry", "g(1/x) + g(x) = 0 to 1e-10", nullptr};
    anti.run = [](const SuiteOptions&) {
      const Fn g = E(ExprId::G_ZETA);
      ClaimReport r = check_identity(
          "Z7.antisymmetry", [g](double x) { return g(1.0 / x); },
          [g](double x) { return -g(x); }, {0.01, 0.99, 200, Spacing::Log, 1e-4, 0}, 1e-10);
      r.statement = "g(1/x) + g(x) = 0 to 1e-10";
      return r;
    };
    c.checks.push_back(anti);
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z8", "zeta-complete-monotonicity", "zeta concave on (0,1), convex on (1,inf)", {}};
    c.checks.push_back(curvature("Z8.concave", "zeta strictly concave on (0,1)", z,
                                 Curvature::Concave, unit));
    c.checks.push_back(curvature("Z8.convex", "zeta strictly convex on (1,inf)", z,
                                 Curvature::Convex, {1.0, 25.0}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z9", "exponential-auxiliary-bounds",
               "4^(1-x)((x-1)log4+1) <= x/2 and log(a)/a^x <= 1/x^2 for x >= 2, a >= 2", {}};
    const Dom d{2.0, 50.0};
    c.checks.push_back(pointwise("Z9.t", "4^(1-x)((x-1)log4+1) - x/2 <= 0 on [2,50]",
                                 E(ExprId::T_LEM), Relation::LessEq, C(0.0), d));
    const std::pair<const char*, double> as[] = {
        {"2", 2.0}, {"e", std::numbers::e}, {"3", 3.0}, {"10", 10.0}};
    for (const auto& [name, a] : as) {
      c.checks.push_back(pointwise(std::string("Z9.s_a") + name,
                                   std::string("x^2 log(a)/a^x - 1 <= 0 on [2,50], a=") + name,
                                   EP(ExprId::S_LEM, {a}), Relation::LessEq, C(0.0), d));
    }
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z10", "zeta-derivative-bounds",
               "zeta'(x) < -1/(1-x)^2 - gamma_1 - gamma_2 (1-x) on (0,1)", {}};
    c.checks.push_back(pointwise("Z10.bound", c.statement, E(ExprId::THETA_BOUND), Relation::Less,
                                 C(0.0), {0.0, 0.99}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z11", "zeta-derivative-bounds",
               "zeta'(x) > -1/(x-1)^2 + gamma_2 (x-1) - gamma_1 - gamma_3 (x-1)^2/2 on (1,2]", {}};
    c.checks.push_back(pointwise("Z11.bound", c.statement, E(ExprId::TAU_BOUND),
                                 Relation::Greater, C(0.0), {1.03, 2.0}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z12", "zeta-derivative-bounds",
               "-zeta'(x) <= b^(1-x)((x-1)log b+1)/(x-1)^2 + sum_{a=2..4} log(a)/a^x, b in {3,4}",
               {}};
    const Fn neg_z1 = [](double x) { return -zeta(x, 1).value; };
    c.checks.push_back(pointwise("Z12.base3", "-zeta'(x) <= upper bound with base 3 on [1.05,50]",
                                 neg_z1, Relation::LessEq, E(ExprId::ZP_UPPER3), {1.05, 50.0}));
    c.checks.push_back(pointwise("Z12.base4", "-zeta'(x) <= upper bound with base 4 on [1.05,50]",
                                 neg_z1, Relation::LessEq, E(ExprId::ZP_UPPER4), {1.05, 50.0}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z13", "zeta-derivative-bounds", "second-order Laurent bounds for zeta, zeta'' on (0,1)", {}};
    // The pole terms agree on both sides and are removed before comparing.
    c.checks.push_back(pointwise(
        "Z13.second_derivative", "zeta''(x) > gamma_2 - 2/(1-x)^3 on (0,1)", zreg(2),
        Relation::Greater, [](double) { return gm(2); }, unit));
    c.checks.push_back(pointwise(
        "Z13.lower", "zeta(x) > 1/(x-1) + gamma + gamma_1(1-x) + gamma_2(1-x)^2/2 on (0,1)",
        zreg(0), Relation::Greater,
        [](double x) { return kG + gm(1) * (1 - x) + 0.5 * gm(2) * (1 - x) * (1 - x); },
        {0.0, 0.97}));
    c.checks.push_back(pointwise(
        "Z13.upper",
        "zeta(x) < 1/(x-1) - (2gamma_1+gamma_2-1)/2 + gamma_1(1-x) + gamma_2(1-x)^2/2 on (0,1)",
        zreg(0), Relation::Less,
        [](double x) {
          return -(2 * gm(1) + gm(2) - 1) / 2 + gm(1) * (1 - x) + 0.5 * gm(2) * (1 - x) * (1 - x);
        },
        unit));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z14", "log-convexity-reflection", "log|zeta| strictly convex on (0,1)", {}};
    c.checks.push_back(curvature("Z14.convex", c.statement, E(ExprId::LOGABS_ZETA),
                                 Curvature::Convex, unit));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z15", "log-convexity-reflection", "zeta(x) zeta(1-x) > zeta(1/2)^2 on (0,1), x != 1/2", {}};
    const double zh = zeta(0.5).value;
    c.checks.push_back(pointwise("Z15.left", c.statement + " on (0,1/2)", E(ExprId::REFL_PROD),
                                 Relation::Greater, C(zh * zh), {0.0, 0.49}));
    c.checks.push_back(pointwise("Z15.right", c.statement + " on (1/2,1)", E(ExprId::REFL_PROD),
                                 Relation::Greater, C(zh * zh), {0.51, 1.0}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z16", "reciprocal-zeta-concave", "1/zeta strictly concave on (0,1)", {}};
    c.checks.push_back(curvature("Z16.concave", c.statement, E(ExprId::INV_ZETA),
                                 Curvature::Concave, unit));
    c.checks.push_back(value(
        "Z16.gb_at_zero", "g(0) of the concavity bound is about -0.677849",
        [] { return aux_eval(ExprId::GB_QUINTIC, 0.0).value; }, -0.677849, 1e-5, 0.0));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z17", "reflection-harmonic-means",
               "zeta(1/2) < H(zeta(x), zeta(1-x)) < -1 on (0,1)", {}};
    const double zh = zeta(0.5).value;
    c.checks.push_back(pointwise("Z17.lower_left", "zeta(1/2) < H(zeta(x),zeta(1-x)) on (0,1/2)",
                                 C(zh), Relation::Less, E(ExprId::HM_ZETA_REFL), {0.0, 0.49}));
    c.checks.push_back(pointwise("Z17.lower_right", "zeta(1/2) < H(zeta(x),zeta(1-x)) on (1/2,1)",
                                 C(zh), Relation::Less, E(ExprId::HM_ZETA_REFL), {0.51, 1.0}));
    c.checks.push_back(pointwise("Z17.upper", "H(zeta(x),zeta(1-x)) < -1 on (0,1)",
                                 E(ExprId::HM_ZETA_REFL), Relation::Less, C(-1.0), unit));
    c.checks.push_back(limit("Z17.limit_zero", "H(zeta(x),zeta(1-x)) -> -1 as x -> 0+",
                             E(ExprId::HM_ZETA_REFL), 0.0, 1, -1.0));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z18", "reflection-harmonic-means",
               "log4/(1+log4) < H(eta(x), eta(1-x)) < (1-sqrt2) zeta(1/2) on (0,1), x != 1/2", {}};
    const double l4 = std::log(4.0);
    const double top = (1 - std::numbers::sqrt2) * zeta(0.5).value;
    c.checks.push_back(pointwise("Z18.lower", "log4/(1+log4) < H(eta(x),eta(1-x)) on (0,1)",
                                 C(l4 / (1 + l4)), Relation::Less, E(ExprId::HM_ETA_REFL), unit));
    c.checks.push_back(pointwise("Z18.upper_left", "H(eta(x),eta(1-x)) < (1-sqrt2)zeta(1/2) on (0,1/2)",
                                 E(ExprId::HM_ETA_REFL), Relation::Less, C(top), {0.0, 0.49}));
    c.checks.push_back(pointwise("Z18.upper_right", "H(eta(x),eta(1-x)) < (1-sqrt2)zeta(1/2) on (1/2,1)",
                                 E(ExprId::HM_ETA_REFL), Relation::Less, C(top), {0.51, 1.0}));
    c.checks.push_back(identity_at(
        "Z18.at_half", "H(eta(1/2),eta(1/2)) = (1-sqrt2) zeta(1/2)",
        [] { return aux_eval(ExprId::HM_ETA_REFL, 0.5).value; }, [top] { return top; }, 1e-12,
        0.5));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z19", "zeta-inversion-sum",
               "phi(s) = zeta(s) + zeta(1/s): decreasing on (0,1), increasing on (1,inf), "
               "2gamma-1 < phi < 1/2",
               {}};
    const double lo = 2 * kG - 1;
    const Fn phi = E(ExprId::PHI_SUM);
    c.checks.push_back(monotone("Z19.decreasing", "phi strictly decreasing on (0,1)", phi, -1, unit));
    c.checks.push_back(monotone("Z19.increasing", "phi strictly increasing on (1,inf)", phi, 1, above_log));
    c.checks.push_back(pointwise("Z19.lower_left", "2gamma-1 < phi on (0,1)", C(lo),
                                 Relation::Less, phi, {0.0, 0.999}));
    c.checks.push_back(pointwise("Z19.lower_right", "2gamma-1 < phi on (1,inf)", C(lo),
                                 Relation::Less, phi, {1.001, 1000.0, Spacing::Log}));
    c.checks.push_back(pointwise("Z19.upper_left", "phi < 1/2 on (0,1)", phi, Relation::Less,
                                 C(0.5), unit));
    c.checks.push_back(pointwise("Z19.upper_right", "phi < 1/2 on (1,inf)", phi, Relation::Less,
                                 C(0.5), above_log));
    c.checks.push_back(limit("Z19.limit_left", "phi(s) -> 2gamma-1 as s -> 1-", phi, 1.0, -1, lo));
    c.checks.push_back(limit("Z19.limit_right", "phi(s) -> 2gamma-1 as s -> 1+", phi, 1.0, 1, lo));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z20", "log-concavity-family",
               "(x-1)zeta(x) log-concave on (0,inf); log((x-1)/(1-2^(1-x))) concave; "
               "x^a (x-1)^b zeta(x) log-concave on (1,inf) iff a >= 0 and b >= 1",
               {}};
    c.checks.push_back(curvature("Z20.g1", "(x-1)zeta(x) strictly log-concave on (0,inf)",
                                 log_abs_of(E(ExprId::G1)), Curvature::Concave,
                                 {0.001, 100.0, Spacing::Log}));
    c.checks.push_back(curvature("Z20.varphi", "log((x-1)/(1-2^(1-x))) strictly concave on (0,inf)",
                                 E(ExprId::VARPHI_RATIO), Curvature::Concave,
                                 {0.001, 100.0, Spacing::Log}));
    const Dom d{1.0, 50.0, Spacing::Log};
    const struct {
      const char* id;
      double a, b;
      bool holds;
    } cases[] = {{"Z20.h_0_1", 0, 1, true},
                 {"Z20.h_1_2", 1, 2, true},
                 {"Z20.h_0_0.5", 0, 0.5, false},
                 {"Z20.h_-1_2", -1, 2, false}};
    for (const auto& k : cases) {
      const std::string ab = "(a,b)=(" + fmt(k.a) + "," + fmt(k.b) + ")";
      c.checks.push_back(curvature(
          k.id,
          std::string(k.holds ? "" : "NOT ") + "log-concave on (1,inf), " + ab,
          log_abs_of(EP(ExprId::H_AB, {k.a, k.b})), Curvature::Concave, d, !k.holds));
    }
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z21", "log-concavity-family",
               "G2 = x(1-x)zeta(x)zeta(1-x) increasing on (0,1/2), decreasing on (1/2,1); "
               "1/(2x(1-x)) < zeta(x)zeta(1-x) < zeta(1/2)^2/(4x(1-x))",
               {}};
    const double zh2 = std::pow(zeta(0.5).value, 2);
    c.checks.push_back(monotone("Z21.increasing", "G2 strictly increasing on (0,1/2)",
                                E(ExprId::G2), 1, {0.0, 0.49}));
    c.checks.push_back(monotone("Z21.decreasing", "G2 strictly decreasing on (1/2,1)",
                                E(ExprId::G2), -1, {0.51, 1.0}));
    const Fn low = [](double x) { return 1.0 / (2 * x * (1 - x)); };
    const Fn high = [zh2](double x) { return zh2 / (4 * x * (1 - x)); };
    c.checks.push_back(pointwise("Z21.lower", "1/(2x(1-x)) < zeta(x)zeta(1-x) on (0,1)", low,
                                 Relation::Less, E(ExprId::REFL_PROD), unit));
    c.checks.push_back(pointwise("Z21.upper_left", "zeta(x)zeta(1-x) < zeta(1/2)^2/(4x(1-x)) on (0,1/2)",
                                 E(ExprId::REFL_PROD), Relation::Less, high, {0.0, 0.49}));
    c.checks.push_back(pointwise("Z21.upper_right", "zeta(x)zeta(1-x) < zeta(1/2)^2/(4x(1-x)) on (1/2,1)",
                                 E(ExprId::REFL_PROD), Relation::Less, high, {0.51, 1.0}));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z22", "log-derivative-bounds",
               "b/(1-x) - a/x < zeta'/zeta < 1/(1-x) - a/x + gamma + a (x > 1); "
               "1/(1-x) < zeta'/zeta < log(2pi) - 1 + 1/(1-x) (x > 0)",
               {}};
    const Fn ld = E(ExprId::ZETA_LOGDERIV);
    const Dom above{1.0, 50.0, Spacing::Log};
    for (double a : {0.0, 1.0}) {
      const std::string as = fmt(a);
      c.checks.push_back(pointwise("Z22.lower_b2_a" + as, "2/(1-x) - a/x < zeta'/zeta, a=" + as,
                                   [a](double x) { return 2.0 / (1 - x) - a / x; }, Relation::Less,
                                   ld, above));
      c.checks.push_back(pointwise("Z22.upper_a" + as, "zeta'/zeta < 1/(1-x) - a/x + gamma + a, a=" + as,
                                   ld, Relation::Less,
                                   [a](double x) { return 1.0 / (1 - x) - a / x + kG + a; }, above));
    }
    const double l2p = std::log(2 * pi) - 1;
    const Fn pole = [](double x) { return 1.0 / (1 - x); };
    const Fn cap = [l2p](double x) { return l2p + 1.0 / (1 - x); };
    c.checks.push_back(pointwise("Z22.floor_left", "1/(1-x) < zeta'/zeta on (0,1)", pole,
                                 Relation::Less, ld, unit));
    c.checks.push_back(pointwise("Z22.floor_right", "1/(1-x) < zeta'/zeta on (1,inf)", pole,
                                 Relation::Less, ld, above));
    c.checks.push_back(pointwise("Z22.cap_left", "zeta'/zeta < log(2pi) - 1 + 1/(1-x) on (0,1)",
                                 ld, Relation::Less, cap, unit));
    c.checks.push_back(pointwise("Z22.cap_right", "zeta'/zeta < log(2pi) - 1 + 1/(1-x) on (1,inf)",
                                 ld, Relation::Less, cap, above));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z23", "zeta-products",
               "u(s) = zeta(s)zeta(1/s) < -1/2, decreasing on (0,1), increasing on (1,inf); "
               "h(s) = zeta(1+s)zeta(1-s) increasing on (0,1), h < -pi^2/12",
               {}};
    const Fn u = E(ExprId::U_PROD), h = E(ExprId::H_PROD);
    c.checks.push_back(pointwise("Z23.u_left", "u(s) < -1/2 on (0,1)", u, Relation::Less, C(-0.5), unit));
    c.checks.push_back(pointwise("Z23.u_right", "u(s) < -1/2 on (1,inf)", u, Relation::Less, C(-0.5), above_log));
    c.checks.push_back(monotone("Z23.u_decreasing", "u strictly decreasing on (0,1)", u, -1, unit));
    c.checks.push_back(monotone("Z23.u_increasing", "u strictly increasing on (1,inf)", u, 1, above_log));
    c.checks.push_back(monotone("Z23.h_increasing", "h strictly increasing on (0,1)", h, 1, unit));
    c.checks.push_back(pointwise("Z23.h_bound", "h(s) < -pi^2/12 on (0,1)", h, Relation::Less,
                                 C(-pi * pi / 12), unit));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"Z24", "stieltjes-bounds",
               "|gamma_n| <= 4(n-1)!/pi^n (n even), 2(n-1)!/pi^n (n odd); |gamma_n| <= n!/2^(n+1)",
               {}};
    auto family = [](std::string id, std::string stmt, double (*bound)(int)) {
      CheckDef chk{id, stmt, nullptr};
      chk.run = [id, stmt, bound](const SuiteOptions&) {
        const auto& t = stieltjes_table();
        ClaimReport r;
        r.id = id;
        r.kind = CheckKind::POINTWISE;
        r.statement = stmt;
        r.domain_a = 1;
        r.domain_b = static_cast<double>(t.max_index());
        r.min_margin = kInf;
        for (std::size_t n = 1; n < t.size(); ++n) {
          const double m = bound(static_cast<int>(n)) - std::abs(t.gamma[n]);
          ++r.points;
          if (m < r.min_margin) {
            r.min_margin = m;
            r.argmin_x = static_cast<double>(n);
          }
        }
        r.status = r.min_margin > 0 ? Status::Pass : Status::Fail;
        r.notes = "over stored indices 1.." + std::to_string(t.max_index());
        return r;
      };
      return chk;
    };
    c.checks.push_back(family("Z24.parity_bound", "|gamma_n| <= c (n-1)!/pi^n", &stieltjes_bound));
    c.checks.push_back(family("Z24.factorial_bound", "|gamma_n| <= n!/2^(n+1)", &lavrik_bound));
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- spot values

std::vector<ClaimDef> spot_claims() {
  ClaimDef c{"X1", "auxiliary-spot-values",
             "printed numerics of the auxiliary functions and polynomials", {}};
  auto p1 = [] { return build_named_poly(PolyId::P1).poly; };
  auto v = [] { return build_named_poly(PolyId::V).poly; };
  c.checks.push_back(value("X1.theta_at_2", "theta(2) ~ -0.227",
                           [] { return aux_eval(ExprId::THETA, 2.0).value; }, -0.227, 2e-3, 2.0));
  c.checks.push_back(value("X1.x0", "x0 ~ 1.4616", [] { return digamma_zero().x0; }, 1.4616,
                           5e-5, 1.4616));
  c.checks.push_back(value("X1.gb", "g(0) ~ -0.677849",
                           [] { return aux_eval(ExprId::GB_QUINTIC, 0.0).value; }, -0.677849,
                           1e-5, 0.0));
  c.checks.push_back(value("X1.gb_d1", "g'(0) ~ -2.52896",
                           [] { return aux_eval(ExprId::GB_QUINTIC_D1, 0.0).value; }, -2.52896,
                           1e-4, 0.0));
  c.checks.push_back(value("X1.gb_d2", "-g''(0)/3 ~ 3.70527",
                           [] { return -aux_eval(ExprId::GB_QUINTIC_D2, 0.0).value / 3.0; },
                           3.70527, 1e-4, 0.0));
  c.checks.push_back(value("X1.p1_d1_at_2", "P1'(2) ~ 0.393",
                           [p1] { return p1().derivative()(2).get_d(); }, 0.393, 2e-3, 2.0));
  c.checks.push_back(value("X1.p1_max", "max of P1 on [2,inf) ~ -0.535",
                           [p1] { return max_from(p1(), 2).value; }, -0.535, 2e-3, 2.0));
  c.checks.push_back(value("X1.v_at_1", "v(1) ~ -0.291", [v] { return v()(1).get_d(); }, -0.291,
                           2e-3, 1.0));
  c.checks.push_back(identity_at("X1.v_at_1_exact", "v(1) = 4 gamma_1",
                                 [v] { return v()(1).get_d(); }, [] { return 4 * gm(1); }, 1e-12, 1.0));
  c.checks.push_back(value("X1.v_d1_at_1", "v'(1) ~ -0.492",
                           [v] { return v().derivative()(1).get_d(); }, -0.492, 2e-3, 1.0));
  c.checks.push_back(identity_at("X1.v_d1_at_1_exact", "v'(1) = 6gamma_1 + 6gamma_2 + gamma_3",
                                 [v] { return v().derivative()(1).get_d(); },
                                 [] { return 6 * gm(1) + 6 * gm(2) + gm(3); }, 1e-12, 1.0));
  c.checks.push_back(pointwise(
      "X1.g_bound", "g(x) <= f(1/x) on (0,1)", E(ExprId::G_ZETA), Relation::LessEq,
      [](double x) { return aux_eval(ExprId::F_BOUND, 1.0 / x).value; }, {0.0, 0.99}));
  return {c};
}

// ---------------------------------------------------------------- certificates

ClaimReport certificate_row(const std::string& id, const std::string& stmt, const Certificate& cert,
                            int expected_roots, int expected_sign, bool need_robust) {
  ClaimReport r;
  r.id = id;
  r.kind = CheckKind::ROOT_COUNT;
  r.statement = stmt;
  r.domain_a = cert.a.get_d();
  r.domain_b = cert.to_infinity ? kInf : cert.b.get_d();
  r.argmin_x = 0.5 * (cert.a.get_d() + cert.b.get_d());
  r.points = 1;
  const int roots = cert.root_count + cert.tail_root_count;
  r.min_margin = 0.5 - std::abs(roots - expected_roots);
  bool ok = roots == expected_roots;
  if (expected_sign != 0) ok = ok && cert.sign == expected_sign;
  if (need_robust) ok = ok && cert.robust;
  r.status = ok ? Status::Pass : Status::Fail;
  std::ostringstream os;
  os << "roots=" << roots << " sign=" << (cert.sign > 0 ? "+" : cert.sign < 0 ? "-" : "0")
     << " margin=" << fmt(cert.margin, 6) << " perturbation=" << fmt(cert.perturbation_bound, 3)
     << (cert.robust ? " robust" : " nominal");
  if (cert.perturbed) os << " endpoints-perturbed";
  if (cert.root_bound) os << " cauchy-bound=" << fmt(*cert.root_bound, 6);
  r.notes = os.str();
  return r;
}

std::string isolated_roots_note(const RationalPoly& p, const Rational& a, const Rational& b) {
  std::string s;
  for (const auto& iv : isolate_roots(p, a, b, Rational(1, 1000000000))) {
    if (!s.empty()) s += ", ";
    s += fmt(Rational((iv.lo + iv.hi) / 2).get_d(), 10);
  }
  return s.empty() ? "" : "root(s) near " + s;
}

std::vector<ClaimDef> polynomial_claims() {
  std::vector<ClaimDef> out;
  auto cert_check = [](std::string id, std::string stmt, PolyId pid, long a, long b,
                       int expected_roots, int sign, bool robust) {
    CheckDef chk{id, stmt, nullptr};
    chk.run = [=](const SuiteOptions&) {
      const CoeffEnclosure e = build_named_poly(pid);
      Certificate cert = certify_sign(e, a, b, sign == 0 ? 1 : sign);
      ClaimReport r = certificate_row(id, stmt, cert, expected_roots, sign, robust);
      if (cert.root_count != expected_roots) {
        r.notes += "; " + isolated_roots_note(e.poly, a, b);
      }
      return r;
    };
    return chk;
  };
  auto at_one = [](std::string id, std::string stmt, PolyId pid, std::function<double()> rhs) {
    return identity_at(id, stmt, [pid] { return build_named_poly(pid).poly(1).get_d(); }, rhs,
                       1e-8, 1.0, true);
  };
  const double pi6 = std::pow(pi, 6), pi16 = std::pow(pi, 16);
  {
    ClaimDef c{"S1", "polynomial-certificates", "P has no zero on (0,1) and P < 0 there; P(1) = -pi^6 gamma_3", {}};
    c.checks.push_back(cert_check("S1.certificate", "P: 0 roots in (0,1), negative, robust",
                                  PolyId::P, 0, 1, 0, -1, true));
    c.checks.push_back(at_one("S1.value_at_1", "P(1) = -pi^6 gamma_3", PolyId::P,
                              [pi6] { return -pi6 * gm(3); }));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"S2", "polynomial-certificates", "Q has no zero on (1,2) and Q > 0 there; Q(1) = pi^16 gamma_4", {}};
    c.checks.push_back(cert_check("S2.certificate", "Q: 0 roots in (1,2), positive, robust",
                                  PolyId::Q, 1, 2, 0, 1, true));
    c.checks.push_back(at_one("S2.value_at_1", "Q(1) = pi^16 gamma_4", PolyId::Q,
                              [pi16] { return pi16 * gm(4); }));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"S3", "polynomial-certificates", "x^4 + 4x^2 - 1 has exactly one root r in (0,1), r^2 = sqrt5 - 2", {}};
    CheckDef count{"S3.certificate", "x^4+4x^2-1: exactly 1 root in (0,1)", nullptr};
    count.run = [](const SuiteOptions&) {
      const CoeffEnclosure e = build_named_poly(PolyId::QUARTIC);
      Certificate cert = certify_sign(e, 0, 1, 1);
      ClaimReport r = certificate_row("S3.certificate", "x^4+4x^2-1: exactly 1 root in (0,1)",
                                      cert, 1, 0, false);
      r.notes += "; " + isolated_roots_note(e.poly, 0, 1);
      return r;
    };
    c.checks.push_back(count);
    c.checks.push_back(identity_at(
        "S3.root_square", "r^2 = sqrt5 - 2 for the root r in (0,1)",
        [] {
          const auto e = build_named_poly(PolyId::QUARTIC);
          const auto iv = isolate_roots(e.poly, 0, 1, Rational(1, mpz_class("1000000000000000000")));
          if (iv.size() != 1) throw CertificationError("S3: expected exactly one isolated root");
          const double r = Rational((iv[0].lo + iv[0].hi) / 2).get_d();
          return r * r;
        },
        [] { return std::sqrt(5.0) - 2.0; }, 1e-12, 0.486));
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"S4", "polynomial-certificates",
               "P1 < 0 on [2,inf); P1' has exactly one root in [2,inf) and P1'(2) > 0", {}};
    CheckDef neg{"S4.certificate", "P1: no root on [2,inf), negative", nullptr};
    neg.run = [](const SuiteOptions&) {
      const CoeffEnclosure e = build_named_poly(PolyId::P1);
      const Certificate cert = certify_sign_to_infinity(e, 2, 50, -1);
      return certificate_row("S4.certificate", "P1: no root on [2,inf), negative", cert, 0, -1, true);
    };
    c.checks.push_back(neg);
    CheckDef crit{"S4.critical_point", "P1' has exactly one root in [2,inf), P1'(2) > 0", nullptr};
    crit.run = [](const SuiteOptions&) {
      const CoeffEnclosure e = build_named_poly(PolyId::P1);
      const RationalPoly d = e.poly.derivative();
      const Rational hi = std::max(cauchy_root_bound(d), Rational(3));
      const int roots = count_roots_in(d, 2, hi);
      const int s2 = sign(d(2));
      ClaimReport r;
      r.id = "S4.critical_point";
      r.kind = CheckKind::ROOT_COUNT;
      r.statement = "P1' has exactly one root in [2,inf), P1'(2) > 0";
      r.domain_a = 2;
      r.domain_b = kInf;
      r.points = 1;
      r.min_margin = 0.5 - std::abs(roots - 1);
      r.argmin_x = max_from(e.poly, 2).x;
      r.status = roots == 1 && s2 > 0 ? Status::Pass : Status::Fail;
      r.notes = "roots=" + std::to_string(roots) + " P1'(2)=" + fmt(d(2).get_d(), 8) +
                " critical point x1=" + fmt(r.argmin_x, 10);
      return r;
    };
    c.checks.push_back(crit);
    out.push_back(std::move(c));
  }
  {
    ClaimDef c{"S5", "polynomial-certificates",
               "v < 0 and v' < 0 on (1,2]; v' has two negative roots", {}};
    c.checks.push_back(cert_check("S5.certificate", "v: no root on (1,2], negative", PolyId::V, 1,
                                  2, 0, -1, true));
    CheckDef deriv{"S5.derivative", "v': no root on (1,2], negative; two negative roots", nullptr};
    deriv.run = [](const SuiteOptions&) {
      const CoeffEnclosure e = build_named_poly(PolyId::V);
      CoeffEnclosure d{PolyId::V, e.poly.derivative(), e.coeff_abs_err * std::max(e.poly.degree(), 1)};
      Certificate cert = certify_sign(d, 1, 2, -1);
      cert.poly_id = "V'";
      ClaimReport r = certificate_row("S5.derivative",
                                      "v': no root on (1,2], negative; two negative roots", cert,
                                      0, -1, true);
      const Rational bound = cauchy_root_bound(d.poly);
      const int negative = count_roots_in(d.poly, -bound, 0);
      r.notes += "; negative roots=" + std::to_string(negative);
      if (negative != 2) r.status = Status::Fail;
      return r;
    };
    c.checks.push_back(deriv);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClaimDef> build_registry() {
  std::vector<ClaimDef> all;
  for (auto* part : {&digamma_claims, &zeta_claims, &spot_claims, &polynomial_claims}) {
    for (auto& c : (*part)()) all.push_back(std::move(c));
  }
  return all;
}

}  // namespace

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> r = build_registry();
  return r;
}

const ClaimDef& find_claim(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw LookupError("unknown claim id: " + id);
}

bool SuiteReport::all_pass() const {
  for (const auto& c : claims) {
    if (c.status != Status::Pass) return false;
  }
  return true;
}

SuiteReport run_suite(const std::vector<std::string>& ids, const SuiteOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<const ClaimDef*> selected;
  const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
  std::string unknown;
  for (const auto& id : ids) {
    if (id == "all") continue;
    const bool known = std::any_of(registry().begin(), registry().end(),
                                   [&](const ClaimDef& c) { return c.id == id; });
    if (!known) unknown += (unknown.empty() ? "" : ", ") + id;
  }
  if (!unknown.empty()) throw LookupError("unknown claim id(s): " + unknown);
  for (const auto& c : registry()) {
    if (all || std::find(ids.begin(), ids.end(), c.id) != ids.end()) selected.push_back(&c);
  }

  struct Job {
    const CheckDef* check;
    std::size_t claim;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (const auto& chk : selected[i]->checks) jobs.push_back({&chk, i});
  }
  SuiteReport out;
  out.rows.resize(jobs.size());
  auto run_one = [&](std::size_t j) {
    const CheckDef& chk = *jobs[j].check;
    try {
      out.rows[j] = chk.run(opts);
    } catch (const std::exception& e) {
      ClaimReport r;
      r.id = chk.id;
      r.statement = chk.statement;
      r.status = Status::Fail;
      r.min_margin = -kInf;
      r.notes = std::string("error: ") + e.what();
      out.rows[j] = std::move(r);
    }
  };
  if (!jobs.empty()) (void)stieltjes_table();  // build once before fanning out
  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(jobs.size())));
  if (threads == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) run_one(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) run_one(j);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < selected.size(); ++i) {
    Status s = Status::Pass;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      if (jobs[j].claim != i) continue;
      if (out.rows[j].status == Status::Fail) s = Status::Fail;
      else if (out.rows[j].status == Status::Inconclusive && s == Status::Pass) s = Status::Inconclusive;
    }
    out.claims.push_back({selected[i]->id, s});
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace hmz
