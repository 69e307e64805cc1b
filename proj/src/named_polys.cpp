#include "hmz/named_polys.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hmz/errors.hpp"
#include "hmz/sturm.hpp"

namespace hmz {
namespace {

// Exact rational approximation with an absolute error bound.
struct Approx {
  Rational v;
  Rational e;
};

Approx operator+(const Approx& a, const Approx& b) { return {a.v + b.v, a.e + b.e}; }
Approx operator-(const Approx& a, const Approx& b) { return {a.v - b.v, a.e + b.e}; }
Approx operator-(const Approx& a) { return {-a.v, a.e}; }
Approx operator*(const Approx& a, const Approx& b) {
  return {a.v * b.v, abs(a.v) * b.e + abs(b.v) * a.e + a.e * b.e};
}
Approx operator*(const Rational& c, const Approx& a) { return {c * a.v, abs(c) * a.e}; }
Approx exact(const Rational& r) { return {r, 0}; }
Approx pw(const Approx& a, int n) {
  Approx r = exact(1);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

Rational q(long n, long d = 1) { return Rational(n, d); }

class Constants {
 public:
  explicit Constants(const StieltjesTable& t) : table_(t) {
    pi_ = {pi_rational(), Rational(1, mpz_class("100000000000000000000000000000000000"))};
  }
  Approx pi(int n = 1) const { return pw(pi_, n); }
  Approx g(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= table_.size()) {
      throw LookupError("named polynomial needs gamma_" + std::to_string(k) +
                        " but the Stieltjes table stops at " +
                        std::to_string(table_.max_index()));
    }
    Approx a;
    if (static_cast<std::size_t>(k) < table_.decimal.size() && !table_.decimal[k].empty()) {
      a.v = parse_rational(table_.decimal[k]);
      // decimal string carries 42 significant digits
      a.e = abs(a.v) * Rational(1, mpz_class("1000000000000000000000000000000000000000000"));
    } else {
      a.v = rational_from_double(table_.gamma[k]);
      a.e = abs(a.v) * rational_from_double(1.2e-16);
    }
    a.e += rational_from_double(std::max(table_.prec[k], 0.0));
    return a;
  }

 private:
  const StieltjesTable& table_;
  Approx pi_;
};

// sum_k c[k] (c0 + c1 x)^k with the error of each c[k] spread through the
// binomial expansion.
CoeffEnclosure expand_shifted(PolyId id, const std::vector<Approx>& c, const Rational& c0,
                              const Rational& c1) {
  RationalPoly poly;
  std::vector<Rational> err;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const RationalPoly basis = RationalPoly::linear_power(c0, c1, static_cast<int>(k));
    poly = poly + c[k].v * basis;
    if (err.size() < basis.coeffs().size()) err.resize(basis.coeffs().size());
    for (std::size_t j = 0; j < basis.coeffs().size(); ++j) err[j] += c[k].e * abs(basis.coeffs()[j]);
  }
  Rational m = 0;
  for (const auto& x : err) m = std::max(m, x);
  return {id, std::move(poly), m};
}

CoeffEnclosure build_p(const Constants& K) {
  auto g = [&](int k) { return K.g(k); };
  auto pi = [&](int n) { return K.pi(n); };
  std::vector<Approx> c(14);
  c[13] = q(1, 5040) * g(10) + exact(288);
  c[12] = q(1, 720) * g(9) + q(112) * pi(1);
  c[11] = q(1, 120) * g(8) - q(1, 1680) * pi(2) * g(10) - q(696) * pi(2);
  c[10] = q(1, 24) * g(7) - q(1, 240) * pi(2) * g(9) - q(276) * pi(3);
  c[9] = q(1, 6) * g(6) - q(1, 40) * pi(2) * g(8) + q(1, 1680) * pi(4) * g(10) + q(440) * pi(4);
  c[8] = q(1, 2) * g(5) - q(1, 8) * pi(2) * g(7) + q(1, 240) * pi(4) * g(9) + q(180) * pi(5);
  c[7] = g(4) - q(1, 2) * pi(2) * g(6) + q(1, 40) * pi(4) * g(8) - q(1, 5040) * pi(6) * g(10);
  c[6] = g(3) - q(3, 2) * pi(2) * g(5) + q(1, 8) * pi(4) * g(7) - q(1, 720) * pi(6) * g(9);
  c[5] = -q(3) * pi(2) * g(4) + q(1, 2) * pi(4) * g(6) - q(1, 120) * pi(6) * g(8);
  c[4] = -q(3) * pi(2) * g(3) + q(3, 2) * pi(4) * g(5) - q(1, 24) * pi(6) * g(7);
  c[3] = q(3) * pi(4) * g(4) - q(1, 6) * pi(6) * g(6);
  c[2] = q(3) * pi(4) * g(3) - q(1, 2) * pi(6) * g(5);
  c[1] = -(pi(6) * g(4));
  c[0] = -(pi(6) * g(3));
  return expand_shifted(PolyId::P, c, 1, -1);  // powers of (1 - x)
}

CoeffEnclosure build_q(const Constants& K) {
  auto g = [&](int k) { return K.g(k); };
  auto pi = [&](int n) { return K.pi(n); };
  std::vector<Approx> c(14, exact(0));
  c[13] = -q(1, 5040) * pi(10) * g(10) - exact(288);
  // The displayed formula has no (x-1)^12 term; the 112 pi coefficient sits
  // on (x-1)^11 and is kept there.
  c[11] = q(1, 720) * pi(10) * g(9) - q(112) * pi(1);
  c[10] = -q(1, 120) * pi(10) * g(8) + q(1, 1680) * pi(12) * g(10) + q(696) * pi(2);
  c[9] = q(1, 24) * pi(10) * g(7) - q(1, 240) * pi(12) * g(9) + q(276) * pi(3);
  c[8] = -q(1, 6) * pi(10) * g(6) + q(1, 40) * pi(12) * g(8) - q(1, 1680) * pi(14) * g(10) -
         q(440) * pi(4);
  c[7] = q(1, 2) * pi(10) * g(5) - q(1, 8) * pi(12) * g(7) + q(1, 240) * pi(14) * g(9) -
         q(180) * pi(5);
  c[6] = -(pi(10) * g(4)) + q(1, 2) * pi(12) * g(6) - q(1, 40) * pi(14) * g(8) +
         q(1, 5040) * pi(16) * g(10);
  c[5] = -q(3, 2) * pi(12) * g(5) + q(1, 8) * pi(14) * g(7) - q(1, 720) * pi(16) * g(9);
  c[4] = q(3) * pi(12) * g(4) - q(1, 2) * pi(14) * g(6) + q(1, 120) * pi(16) * g(8);
  c[3] = q(3, 2) * pi(14) * g(5) - q(1, 24) * pi(16) * g(7);
  c[2] = q(1, 6) * pi(16) * g(6) - q(3) * pi(14) * g(4);
  c[1] = -q(1, 2) * pi(16) * g(5);
  c[0] = pi(16) * g(4);
  return expand_shifted(PolyId::Q, c, -1, 1);  // powers of (x - 1)
}

CoeffEnclosure build_p1(const Constants& K) {
  const Approx g1 = K.g(1), g2 = K.g(2);
  std::vector<Approx> c(4);
  c[3] = -g1 - g2 - exact(q(1, 2));
  c[2] = q(2) * g1 + q(3) * g2 + exact(3);
  c[1] = -g1 - q(3) * g2 - exact(6);
  c[0] = g2 + exact(3);
  return expand_shifted(PolyId::P1, c, 0, 1);
}

CoeffEnclosure build_v(const Constants& K) {
  const Approx g1 = K.g(1), g2 = K.g(2), g3 = K.g(3);
  std::vector<Approx> c(4);
  c[3] = q(2) * g2 + g3;
  c[2] = q(2) * g1 - g3;
  c[1] = q(2) * g1;
  c[0] = -q(2) * g2;
  return expand_shifted(PolyId::V, c, 0, 1);
}

double worst_perturbation(const CoeffEnclosure& e, const Rational& x) {
  const int deg = std::max(e.poly.degree(), 0);
  const double ax = std::max(1.0, std::abs(x.get_d()));
  return e.coeff_abs_err.get_d() * std::pow(ax, deg) * (deg + 1);
}

}  // namespace

std::string_view poly_name(PolyId id) {
  switch (id) {
    case PolyId::P: return "P";
    case PolyId::Q: return "Q";
    case PolyId::P1: return "P1";
    case PolyId::V: return "V";
    case PolyId::QUARTIC: return "QUARTIC";
  }
  return "?";
}

std::optional<PolyId> parse_poly_id(std::string_view name) {
  for (PolyId id : {PolyId::P, PolyId::Q, PolyId::P1, PolyId::V, PolyId::QUARTIC}) {
    if (poly_name(id) == name) return id;
  }
  return std::nullopt;
}

const Rational& pi_rational() {
  static const Rational pi = parse_rational("3.14159265358979323846264338327950288");
  return pi;
}

CoeffEnclosure build_named_poly(PolyId id, const StieltjesTable& table) {
  const Constants K(table);
  switch (id) {
    case PolyId::P: return build_p(K);
    case PolyId::Q: return build_q(K);
    case PolyId::P1: return build_p1(K);
    case PolyId::V: return build_v(K);
    case PolyId::QUARTIC: return {id, RationalPoly{-1, 0, 4, 0, 1}, 0};
  }
  throw UnsupportedError("unknown polynomial id");
}

CoeffEnclosure build_named_poly(PolyId id) { return build_named_poly(id, stieltjes_table()); }

Certificate certify_sign(const CoeffEnclosure& e, const Rational& a, const Rational& b,
                         int expected_sign, int grid_points) {
  if (expected_sign != 1 && expected_sign != -1) {
    throw DomainError("certify_sign: expected sign must be +1 or -1");
  }
  if (grid_points < 2) throw DomainError("certify_sign: need at least 2 grid points");
  Certificate c;
  c.poly_id = std::string(poly_name(e.id));
  c.a = a;
  c.b = b;
  const RootCount rc = count_roots_detailed(e.poly, a, b);
  c.root_count = rc.count;
  c.perturbed = rc.perturbed;
  Rational mid = (a + b) / 2;
  mid.canonicalize();
  c.sign = sign(e.poly(mid));
  if (c.root_count == 0 && c.sign != expected_sign) {
    throw CertificationError("certify_sign: " + c.poly_id + " has sign " +
                             std::to_string(c.sign) + " on the interval, expected " +
                             std::to_string(expected_sign));
  }
  double margin = std::numeric_limits<double>::infinity();
  double bound = 0;
  for (int i = 1; i < grid_points - 1; ++i) {
    Rational x = a + (b - a) * Rational(i, grid_points - 1);
    x.canonicalize();
    margin = std::min(margin, std::abs(e.poly(x).get_d()));
    bound = std::max(bound, worst_perturbation(e, x));
  }
  c.margin = margin;
  c.perturbation_bound = bound;
  c.robust = c.root_count == 0 && margin > bound;
  return c;
}

Certificate certify_sign_to_infinity(const CoeffEnclosure& e, const Rational& a,
                                     const Rational& b, int expected_sign, int grid_points) {
  Certificate c = certify_sign(e, a, b, expected_sign, grid_points);
  c.to_infinity = true;
  if (e.poly.degree() < 1) return c;
  const Rational bound = cauchy_root_bound(e.poly);
  c.root_bound = bound.get_d();
  if (bound > b) {
    c.tail_root_count = count_roots_in(e.poly, b, bound);
  }
  if (sign(e.poly.leading()) != expected_sign && c.root_count == 0 && c.tail_root_count == 0) {
    throw CertificationError("certify_sign: leading coefficient of " + c.poly_id +
                             " contradicts the expected sign at infinity");
  }
  if (sign(e.poly.leading()) != expected_sign) c.robust = false;
  return c;
}

Extremum max_from(const RationalPoly& p, const Rational& a) {
  if (p.is_zero()) return {a.get_d(), 0.0};
  if (p.degree() >= 1 && sign(p.leading()) > 0) {
    throw DomainError("max_from: polynomial is unbounded above");
  }
  Extremum best{a.get_d(), p(a).get_d()};
  const RationalPoly dp = p.derivative();
  if (dp.degree() >= 1) {
    const Rational hi = std::max(cauchy_root_bound(dp), Rational(a + 1));
    const Rational width(1, mpz_class("1000000000000000000"));
    for (const auto& iv : isolate_roots(dp, a, hi, width)) {
      Rational x = (iv.lo + iv.hi) / 2;
      x.canonicalize();
      const double v = p(x).get_d();
      if (v > best.value) best = {x.get_d(), v};
    }
  }
  return best;
}

}  // namespace hmz
