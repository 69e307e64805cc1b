#include "hmz/catalog.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hmz/digamma.hpp"
#include "hmz/errors.hpp"
#include "hmz/stieltjes.hpp"
#include "hmz/zeta.hpp"

namespace hmz {
namespace {

constexpr double kLn2 = std::numbers::ln2;

EvalResult g(int n) {
  return {stieltjes(n), stieltjes_table().prec[static_cast<std::size_t>(n)]};
}

EvalResult hm(const EvalResult& a, const EvalResult& b) {
  (void)harmonic_mean(a.value, b.value);  // pole detection
  return EvalResult(2.0) * a * b / (a + b);
}

EvalResult exact(double v) { return {v, 0.0}; }

// Expressions with a removable or cancelling pole at 1 are written through
// zeta_regular, R_k(s) = zeta^(k)(s) - (-1)^k k!/(s-1)^{k+1}; the pole terms
// are cancelled algebraically before any rounding happens.

EvalResult g1(double x) {  // (x-1) zeta(x)
  return exact(1.0) + exact(x - 1.0) * zeta_regular(x, 0);
}

EvalResult varphi_ratio(double x) {
  const double t = x - 1.0;
  const double lt = t * kLn2;
  // (x-1)/(1-2^{1-x}) = t / -expm1(-t ln2)
  double r;
  if (std::abs(lt) < 1e-5) {
    r = (1.0 + lt / 2.0 + lt * lt / 12.0) / kLn2;
  } else {
    r = t / -std::expm1(-lt);
  }
  if (!(r > 0.0)) throw DomainError("VARPHI_RATIO: argument of log is not positive");
  return {std::log(r), 4.0 * kEps * std::abs(std::log(r)) + 4.0 * kEps};
}

EvalResult zp_upper(double x, double base) {
  if (!(x > 1.0)) throw DomainError("ZP_UPPER: requires x > 1");
  const double t = x - 1.0;
  const double lb = std::log(base);
  double v = std::pow(base, 1.0 - x) * (t * lb + 1.0) / (t * t);
  for (double a : {2.0, 3.0, 4.0}) v += std::log(a) / std::pow(a, x);
  return {v, 8.0 * kEps * std::abs(v)};
}

// GB(u) with u = 1 - x and its x-derivatives.
EvalResult gb_quintic(double x, int order) {
  const double u = 1.0 - x;
  if (u == 0.0) throw PoleError("GB_QUINTIC: pole at x = 1");
  const EvalResult G = exact(kEulerGamma), G1 = g(1), G2 = g(2);
  const EvalResult U = exact(u);
  auto p = [&](int n) {
    EvalResult r = exact(1.0);
    for (int i = 0; i < n; ++i) r = r * U;
    return r;
  };
  switch (order) {
    case 0:
      return exact(-2.0) * G / p(3) - exact(6.0) * G1 / p(2) - exact(1.5) * G2 * G2 * p(2) -
             exact(3.0) * G2 * G1 * U - exact(6.0) * G2 / U - exact(2.0) * G1 * G1 + G * G2;
    case 1:  // d/dx = -d/du
      return exact(-6.0) * G / p(4) - exact(12.0) * G1 / p(3) + exact(3.0) * G2 * G2 * U +
             exact(3.0) * G1 * G2 - exact(6.0) * G2 / p(2);
    case 2:
      return exact(-24.0) * G / p(5) - exact(36.0) * G1 / p(4) - exact(3.0) * G2 * G2 -
             exact(12.0) * G2 / p(3);
    default:
      throw UnsupportedError("GB_QUINTIC: derivative order must be 0..2");
  }
}

double param(std::span<const double> params, std::size_t i, std::string_view name) {
  if (params.size() <= i) {
    throw DomainError(std::string(name) + ": missing parameter " + std::to_string(i + 1));
  }
  return params[i];
}

EvalResult eval_raw(ExprId id, double x, std::span<const double> params) {
  const EvalResult gam = exact(kEulerGamma);
  switch (id) {
    case ExprId::THETA:
      return digamma(1.0 / harmonic_mean(x, 1.0 / x));
    case ExprId::SIGMA:
      return hm(digamma(x), digamma(1.0 / x));
    case ExprId::TAU_DIG:
      return exact(1.0) / digamma(x);
    case ExprId::U_DIG:
      return gam / exact(x) + digamma(x);
    case ExprId::G_ZETA: {
      // the pole terms of x zeta'(x) and (1/x) zeta'(1/x) are equal
      const double y = 1.0 / x;
      return exact(x) * zeta_regular(x, 1) - exact(y) * zeta_regular(y, 1);
    }
    case ExprId::PHI_SUM: {
      // 1/(s-1) + 1/(1/s-1) = -1
      return exact(-1.0) + zeta_regular(x, 0) + zeta_regular(1.0 / x, 0);
    }
    case ExprId::U_PROD:
      return zeta(x) * zeta(1.0 / x);
    case ExprId::H_PROD:
      return zeta(1.0 + x) * zeta(1.0 - x);
    case ExprId::RATIO_R:
      return eval_raw(ExprId::PHI_SUM, x, params) / eval_raw(ExprId::U_PROD, x, params);
    case ExprId::HM_ZETA_INV:
      return hm(zeta(x), zeta(1.0 / x));
    case ExprId::HM_ZETA_REFL:
      return hm(zeta(x), zeta(1.0 - x));
    case ExprId::HM_ETA_REFL:
      return hm(eta(x), eta(1.0 - x));
    case ExprId::LOGABS_ZETA:
      return log_abs(zeta(x));
    case ExprId::G1:
      return g1(x);
    case ExprId::G2: {
      // x(1-x) zeta(x) zeta(1-x) = [(1-x) zeta(x)] [x zeta(1-x)]
      if (!(x > 0.0 && x < 1.0)) throw DomainError("G2: requires 0 < x < 1");
      const EvalResult left = exact(-1.0) + exact(1.0 - x) * zeta_regular(x, 0);
      const EvalResult right = exact(-1.0) + exact(x) * zeta_regular(1.0 - x, 0);
      return left * right;
    }
    case ExprId::H_AB: {
      const double a = param(params, 0, "H_AB");
      const double b = param(params, 1, "H_AB");
      if (!(x > 0.0)) throw DomainError("H_AB: requires x > 0");
      // x^a |x-1|^b zeta(x) = x^a |x-1|^{b-1} sign(x-1) G1(x)
      const double d = std::abs(x - 1.0);
      const double s = x > 1.0 ? 1.0 : -1.0;
      return exact(s * std::pow(x, a) * std::pow(d, b - 1.0)) * g1(x);
    }
    case ExprId::VARPHI_RATIO:
      return varphi_ratio(x);
    case ExprId::T_LEM: {
      const double v = std::pow(4.0, 1.0 - x) * ((x - 1.0) * std::log(4.0) + 1.0) - x / 2.0;
      return {v, 8.0 * kEps * (std::abs(v) + x)};
    }
    case ExprId::S_LEM: {
      const double a = param(params, 0, "S_LEM");
      if (!(a > 1.0)) throw DomainError("S_LEM: requires a > 1");
      const double v = x * x * std::log(a) / std::pow(a, x) - 1.0;
      return {v, 8.0 * kEps * (std::abs(v) + 1.0)};
    }
    case ExprId::THETA_BOUND:
      // zeta'(x) + 1/(1-x)^2 is R_1(x)
      return zeta_regular(x, 1) + g(1) + g(2) * exact(1.0 - x);
    case ExprId::TAU_BOUND: {
      const EvalResult t = exact(x - 1.0);
      return zeta_regular(x, 1) - g(2) * t + g(1) + exact(0.5) * g(3) * t * t;
    }
    case ExprId::ZP_UPPER4:
      return zp_upper(x, 4.0);
    case ExprId::ZP_UPPER3:
      return zp_upper(x, 3.0);
    case ExprId::F_BOUND: {
      // -x zeta'(x) - x/(1-x)^2 = -x R_1(x)
      const EvalResult X = exact(x);
      return exact(-x) * zeta_regular(x, 1) - g(1) / X - g(2) * exact(x - 1.0) / (X * X);
    }
    case ExprId::GB_QUINTIC:
      return gb_quintic(x, 0);
    case ExprId::GB_QUINTIC_D1:
      return gb_quintic(x, 1);
    case ExprId::GB_QUINTIC_D2:
      return gb_quintic(x, 2);
    case ExprId::PSI:
      return digamma(x);
    case ExprId::TRIGAMMA:
      return trigamma(x);
    case ExprId::PSI2:
      return digamma2(x);
    case ExprId::ETA:
      return eta(x, 0);
    case ExprId::ETA_D1:
      return eta(x, 1);
    case ExprId::ETA_D2:
      return eta(x, 2);
    case ExprId::ZETA:
      return zeta(x, 0);
    case ExprId::ZETA_D1:
      return zeta(x, 1);
    case ExprId::ZETA_D2:
      return zeta(x, 2);
    case ExprId::ZETA_D3:
      return zeta(x, 3);
    case ExprId::INV_ZETA:
      // (x-1)/G1(x), finite through the pole
      return exact(x - 1.0) / g1(x);
    case ExprId::X_PSI:
      return exact(x) * digamma(x);
    case ExprId::PSI_OVER_LOG: {
      if (x == 1.0) throw DomainError("PSI_OVER_LOG: log x = 0 at x = 1");
      return digamma(x) / exact(std::log(x));
    }
    case ExprId::PSI_PROD:
      return digamma(x) * digamma(1.0 / x);
    case ExprId::PSI_DET: {
      const EvalResult t = trigamma(x);
      return t * t + digamma2(x);
    }
    case ExprId::REFL_PROD:
      return zeta(x) * zeta(1.0 - x);
    case ExprId::ZETA_LOGDERIV:
      return zeta(x, 1) / zeta(x, 0);
    case ExprId::CHAIN_HM:
      return exact(-kEulerGamma * harmonic_mean(x, 1.0 / x));
    case ExprId::CHAIN_PSI_HM:
      return exact(kEulerGamma * kEulerGamma) / digamma(harmonic_mean(x, 1.0 / x));
  }
  throw UnsupportedError("aux_eval: unknown expression");
}

}  // namespace

const std::vector<ExprInfo>& catalog() {
  static const std::vector<ExprInfo> entries = {
      {ExprId::THETA, "THETA", 0, "psi(1/H(x,1/x))"},
      {ExprId::SIGMA, "SIGMA", 0, "H(psi(x),psi(1/x))"},
      {ExprId::TAU_DIG, "TAU_DIG", 0, "1/psi(y)"},
      {ExprId::U_DIG, "U_DIG", 0, "gamma/y+psi(y)"},
      {ExprId::G_ZETA, "G_ZETA", 0, "x zeta'(x)-(1/x) zeta'(1/x)"},
      {ExprId::PHI_SUM, "PHI_SUM", 0, "zeta(s)+zeta(1/s)"},
      {ExprId::U_PROD, "U_PROD", 0, "zeta(s) zeta(1/s)"},
      {ExprId::H_PROD, "H_PROD", 0, "zeta(1+s) zeta(1-s)"},
      {ExprId::RATIO_R, "RATIO_R", 0, "(zeta(x)+zeta(1/x))/(zeta(x) zeta(1/x))"},
      {ExprId::HM_ZETA_INV, "HM_ZETA_INV", 0, "H(zeta(x),zeta(1/x))"},
      {ExprId::HM_ZETA_REFL, "HM_ZETA_REFL", 0, "H(zeta(x),zeta(1-x))"},
      {ExprId::HM_ETA_REFL, "HM_ETA_REFL", 0, "H(eta(x),eta(1-x))"},
      {ExprId::LOGABS_ZETA, "LOGABS_ZETA", 0, "log|zeta(x)|"},
      {ExprId::G1, "G1", 0, "(x-1) zeta(x)"},
      {ExprId::G2, "G2", 0, "x(1-x) zeta(x) zeta(1-x)"},
      {ExprId::H_AB, "H_AB", 2, "x^a |x-1|^b zeta(x)"},
      {ExprId::VARPHI_RATIO, "VARPHI_RATIO", 0, "log((x-1)/(1-2^(1-x)))"},
      {ExprId::T_LEM, "T_LEM", 0, "4^(1-x)((x-1)log4+1)-x/2"},
      {ExprId::S_LEM, "S_LEM", 1, "x^2 log(a)/a^x-1"},
      {ExprId::THETA_BOUND, "THETA_BOUND", 0, "zeta'(x)+1/(1-x)^2+g1+g2(1-x)"},
      {ExprId::TAU_BOUND, "TAU_BOUND", 0, "zeta'(x)+1/(x-1)^2-g2(x-1)+g1+g3(x-1)^2/2"},
      {ExprId::ZP_UPPER4, "ZP_UPPER4", 0,
       "4^(1-x)((x-1)log4+1)/(x-1)^2+sum_{a=2..4} log(a)/a^x"},
      {ExprId::ZP_UPPER3, "ZP_UPPER3", 0,
       "3^(1-x)((x-1)log3+1)/(x-1)^2+sum_{a=2..4} log(a)/a^x"},
      {ExprId::F_BOUND, "F_BOUND", 0, "-x zeta'(x)-x/(1-x)^2-g1/x-g2(x-1)/x^2"},
      {ExprId::GB_QUINTIC, "GB_QUINTIC", 0,
       "-2g/(1-x)^3-6g1/(1-x)^2-(3g2^2/2)(1-x)^2-3g2g1(1-x)-6g2/(1-x)-2g1^2+g g2"},
      {ExprId::PSI, "psi", 0, "digamma"},
      {ExprId::TRIGAMMA, "trigamma", 0, "psi'"},
      {ExprId::PSI2, "psi2", 0, "psi''"},
      {ExprId::ETA, "eta", 0, "Dirichlet eta"},
      {ExprId::ETA_D1, "eta1", 0, "eta'"},
      {ExprId::ETA_D2, "eta2", 0, "eta''"},
      {ExprId::ZETA, "zeta", 0, "Riemann zeta"},
      {ExprId::ZETA_D1, "zeta1", 0, "zeta'"},
      {ExprId::ZETA_D2, "zeta2", 0, "zeta''"},
      {ExprId::ZETA_D3, "zeta3", 0, "zeta'''"},
      {ExprId::GB_QUINTIC_D1, "GB_QUINTIC_D1", 0, "GB_QUINTIC'"},
      {ExprId::GB_QUINTIC_D2, "GB_QUINTIC_D2", 0, "GB_QUINTIC''"},
      {ExprId::INV_ZETA, "INV_ZETA", 0, "1/zeta(x)"},
      {ExprId::X_PSI, "X_PSI", 0, "x psi(x)"},
      {ExprId::PSI_OVER_LOG, "PSI_OVER_LOG", 0, "psi(x)/log(x)"},
      {ExprId::PSI_PROD, "PSI_PROD", 0, "psi(y) psi(1/y)"},
      {ExprId::PSI_DET, "PSI_DET", 0, "psi'(x)^2+psi''(x)"},
      {ExprId::REFL_PROD, "REFL_PROD", 0, "zeta(x) zeta(1-x)"},
      {ExprId::ZETA_LOGDERIV, "ZETA_LOGDERIV", 0, "zeta'(x)/zeta(x)"},
      {ExprId::CHAIN_HM, "CHAIN_HM", 0, "-gamma H(x,1/x)"},
      {ExprId::CHAIN_PSI_HM, "CHAIN_PSI_HM", 0, "gamma^2/psi(H(x,1/x))"},
  };
  return entries;
}

const ExprInfo& expr_info(ExprId id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw LookupError("expr_info: unknown expression id");
}

std::optional<ExprId> parse_expr(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.id;
  }
  if (name == "digamma") return ExprId::PSI;
  return std::nullopt;
}

EvalResult aux_eval(ExprId id, double x, std::span<const double> params) {
  const ExprInfo& info = expr_info(id);
  if (params.size() < static_cast<std::size_t>(info.params)) {
    throw DomainError(std::string(info.name) + ": expects " + std::to_string(info.params) +
                      " parameter(s)");
  }
  const std::string where = std::string(info.name) + "(" + std::to_string(x) + "): ";
  try {
    return eval_raw(id, x, params);
  } catch (const HarmonicMeanPole&) {
    throw;
  } catch (const PoleError& e) {
    throw PoleError(where + e.what());
  } catch (const DomainError& e) {
    throw DomainError(where + e.what());
  } catch (const UnsupportedError& e) {
    throw UnsupportedError(where + e.what());
  }
}

}  // namespace hmz
