#pragma once

// Named real functions built from the digamma and zeta kernels. Every entry
// is a direct composition of kernel calls; aux_eval is the single dispatch
// point used by the claim registry and the CLI.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hmz/eval_result.hpp"

namespace hmz {

enum class ExprId {
  // composites
  THETA,         // psi(1/H(x, 1/x))
  SIGMA,         // H(psi(x), psi(1/x))
  TAU_DIG,       // 1/psi(y)
  U_DIG,         // gamma/y + psi(y)
  G_ZETA,        // x zeta'(x) - (1/x) zeta'(1/x)
  PHI_SUM,       // zeta(s) + zeta(1/s)
  U_PROD,        // zeta(s) zeta(1/s)
  H_PROD,        // zeta(1+s) zeta(1-s)
  RATIO_R,       // (zeta(x) + zeta(1/x)) / (zeta(x) zeta(1/x))
  HM_ZETA_INV,   // H(zeta(x), zeta(1/x))
  HM_ZETA_REFL,  // H(zeta(x), zeta(1-x))
  HM_ETA_REFL,   // H(eta(x), eta(1-x))
  LOGABS_ZETA,   // log|zeta(x)|
  G1,            // (x-1) zeta(x)
  G2,            // x(1-x) zeta(x) zeta(1-x)
  H_AB,          // x^a (x-1)^b zeta(x), params {a, b}; |x-1|^b for x < 1
  VARPHI_RATIO,  // log((x-1)/(1-2^{1-x}))
  T_LEM,         // 4^{1-x}((x-1) log 4 + 1) - x/2
  S_LEM,         // x^2 log(a)/a^x - 1, params {a}
  THETA_BOUND,   // zeta'(x) + 1/(1-x)^2 + gamma_1 + gamma_2 (1-x)
  TAU_BOUND,     // zeta'(x) + 1/(x-1)^2 - gamma_2 (x-1) + gamma_1 + gamma_3 (x-1)^2 / 2
  ZP_UPPER4,     // 4^{1-x}((x-1) log 4 + 1)/(x-1)^2 + sum_{a=2..4} log(a)/a^x
  ZP_UPPER3,     // same with 3^{1-x}((x-1) log 3 + 1)
  F_BOUND,       // -x zeta'(x) - x/(1-x)^2 - gamma_1/x - gamma_2 (x-1)/x^2
  GB_QUINTIC,    // rational function in (1-x) with Stieltjes coefficients
  // kernels
  PSI,
  TRIGAMMA,
  PSI2,
  ETA,
  ETA_D1,
  ETA_D2,
  ZETA,
  ZETA_D1,
  ZETA_D2,
  ZETA_D3,
  // helpers
  GB_QUINTIC_D1,
  GB_QUINTIC_D2,
  INV_ZETA,       // 1/zeta(x)
  X_PSI,          // x psi(x)
  PSI_OVER_LOG,   // psi(x)/log(x)
  PSI_PROD,       // psi(y) psi(1/y)
  PSI_DET,        // psi'(x)^2 + psi''(x)
  REFL_PROD,      // zeta(x) zeta(1-x)
  ZETA_LOGDERIV,  // zeta'(x)/zeta(x)
  CHAIN_HM,       // -gamma H(x, 1/x)
  CHAIN_PSI_HM,   // gamma^2 / psi(H(x, 1/x))
};

struct ExprInfo {
  ExprId id;
  std::string_view name;
  int params;  // number of required parameters
  std::string_view definition;
};

const std::vector<ExprInfo>& catalog();
const ExprInfo& expr_info(ExprId id);
std::optional<ExprId> parse_expr(std::string_view name);

/// Evaluates catalog entry `id` at x. Kernel domain errors are rethrown with
/// the entry name prefixed; HarmonicMeanPole passes through unchanged so
/// scans can skip it.
EvalResult aux_eval(ExprId id, double x, std::span<const double> params = {});

}  // namespace hmz
