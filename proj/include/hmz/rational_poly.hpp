#pragma once

// Dense univariate polynomials with exact rational coefficients (GMP).

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hmz {

using Rational = mpq_class;

/// Parses "3", "-1/7", "0.125", "2.5e-3" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact rational from a finite double (every double is a dyadic rational).
Rational rational_from_double(double v);

int sign(const Rational& r);

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);  // ascending degree
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int degree);
  /// (c0 + c1 x)^n
  static RationalPoly linear_power(const Rational& c0, const Rational& c1, int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;
  RationalPoly derivative() const;

  /// Integer coefficients with gcd 1 and positive leading coefficient.
  RationalPoly primitive_positive() const;
  /// p / gcd(p, p')
  RationalPoly square_free() const;

  std::string to_string() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend RationalPoly operator-(const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q b + r with deg r < deg b. Throws DomainError if b = 0.
std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// Parses whitespace/comma separated ascending coefficients, e.g. "-2 0 1".
RationalPoly parse_poly(std::string_view text);

}  // namespace hmz
