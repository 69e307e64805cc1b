#pragma once

// Real-root counting and isolation by Sturm sequences over exact rationals.

#include <vector>

#include "hmz/rational_poly.hpp"

namespace hmz {

/// Sturm chain of the square-free part of p. Each member is scaled to its
/// primitive part with positive leading coefficient when that preserves the
/// sign pattern (positive scalar), which keeps coefficient growth in check.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& x);

struct RootCount {
  int count = 0;
  Rational a;  // endpoints actually used
  Rational b;
  bool perturbed = false;
};

inline const Rational kEndpointShift{1, 1000000000};  // 1e-9

/// Distinct real roots in (a, b]. If p vanishes at an endpoint, that endpoint
/// is moved inward by 1e-9 (up to 3 times, halving the shift); the report
/// records the shift. Throws EndpointRootError if no retry helps.
RootCount count_roots_detailed(const RationalPoly& p, const Rational& a, const Rational& b);
int count_roots_in(const RationalPoly& p, const Rational& a, const Rational& b);

/// 1 + max |a_i / a_n|: every real root lies in (-B, B).
Rational cauchy_root_bound(const RationalPoly& p);

/// Disjoint intervals [lo, hi], each holding exactly one root of p in (a, b],
/// with hi - lo <= width. Exact bisection driven by Sturm counts.
struct RootInterval {
  Rational lo;
  Rational hi;
};
std::vector<RootInterval> isolate_roots(const RationalPoly& p, const Rational& a,
                                        const Rational& b, const Rational& width);

}  // namespace hmz
