#pragma once

// The fixed polynomials whose sign behaviour underpins the zeta bounds:
//   P        degree 13 in (1-x), coefficients in pi and gamma_3..gamma_10
//   Q        degree 13 in (x-1), coefficients in pi and gamma_4..gamma_10
//   P1       cubic bounding x^2 (x-1)^2 f(x) for x >= 2
//   V        cubic bounding 2x^2/(x-1) f(x) on (1, 2]
//   QUARTIC  x^4 + 4x^2 - 1
// The real coefficients are replaced by rationals; CoeffEnclosure carries a
// bound on how far each may be from the true value.

#include <optional>
#include <string>
#include <string_view>

#include "hmz/rational_poly.hpp"
#include "hmz/stieltjes.hpp"

namespace hmz {

enum class PolyId { P, Q, P1, V, QUARTIC };

std::string_view poly_name(PolyId id);
std::optional<PolyId> parse_poly_id(std::string_view name);

struct CoeffEnclosure {
  PolyId id;
  RationalPoly poly;
  Rational coeff_abs_err;  // max over coefficients
};

/// pi to 36 significant digits, error < 1e-35.
const Rational& pi_rational();

/// Throws LookupError if the table lacks a needed gamma_k.
CoeffEnclosure build_named_poly(PolyId id, const StieltjesTable& table);
CoeffEnclosure build_named_poly(PolyId id);  // default table

struct Certificate {
  std::string poly_id;
  Rational a;
  Rational b;
  bool to_infinity = false;  // claim covers [a, inf), scanned to b
  int root_count = 0;
  bool perturbed = false;
  int sign = 0;                    // sign at the midpoint of [a, b]
  double margin = 0;               // min |poly| over the check grid
  double perturbation_bound = 0;   // err * max(1,|x|)^deg * (deg+1), worst grid point
  bool robust = false;
  std::optional<double> root_bound;  // Cauchy bound used for the tail beyond b
  int tail_root_count = 0;
  bool holds() const { return root_count == 0 && tail_root_count == 0 && sign != 0; }
};

/// Sturm count on (a, b) plus sign and robustness margin. Throws
/// CertificationError if the interval is root-free but the sign there is not
/// `expected_sign`.
Certificate certify_sign(const CoeffEnclosure& e, const Rational& a, const Rational& b,
                         int expected_sign, int grid_points = 1001);

/// As certify_sign on [a, b], extended to [a, inf): roots in (b, C] are
/// counted with C the Cauchy bound, and the leading coefficient must have
/// `expected_sign`.
Certificate certify_sign_to_infinity(const CoeffEnclosure& e, const Rational& a,
                                     const Rational& b, int expected_sign,
                                     int grid_points = 1001);

struct Extremum {
  double x;
  double value;
};

/// Supremum of p over [a, inf) attained at a critical point or at a.
/// Throws DomainError if p is unbounded above there.
Extremum max_from(const RationalPoly& p, const Rational& a);

}  // namespace hmz
