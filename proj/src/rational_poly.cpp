#include "hmz/rational_poly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hmz/errors.hpp"

namespace hmz {
namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  bool any = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    const std::string rest(s.substr(i));
    try {
      exp10 = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
    }
    i += used;
  }
  if (i != s.size()) throw std::invalid_argument("trailing characters in '" + std::string(s) + "'");
  if (exp10 > 100000 || exp10 < -100000) throw std::invalid_argument("exponent out of range");
  Rational r{mpz_class(digits, 10)};  // base 10: a leading 0 must not mean octal
  const long shift = exp10 - frac_digits;
  if (shift > 0) r *= pow10(static_cast<unsigned long>(shift));
  if (shift < 0) r /= pow10(static_cast<unsigned long>(-shift));
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r = num / den;
  r.canonicalize();
  return r;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("rational_from_double: non-finite value");
  Rational r(v);  // mpq_set_d is exact
  r.canonicalize();
  return r;
}

int sign(const Rational& r) { return sgn(r); }

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

void RationalPoly::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::linear_power(const Rational& c0, const Rational& c1, int n) {
  if (n < 0) throw DomainError("linear_power: negative exponent");
  // binomial expansion, exact
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  mpz_class binom = 1;
  for (int k = 0; k <= n; ++k) {
    Rational a = 1, b = 1;
    for (int i = 0; i < n - k; ++i) a *= c0;
    for (int i = 0; i < k; ++i) b *= c1;
    v[k] = Rational(binom) * a * b;
    binom = binom * (n - k) / (k + 1);
  }
  return RationalPoly(std::move(v));
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

const Rational& RationalPoly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

double RationalPoly::evaluate(double x) const { return (*this)(rational_from_double(x)).get_d(); }

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::primitive_positive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs_.size());
  mpz_class content = 0;
  for (const auto& c : coeffs_) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v / content);
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::square_free() const {
  if (degree() <= 1) return *this;
  const RationalPoly g = gcd(*this, derivative());
  if (g.degree() <= 0) return *this;
  return divrem(*this, g).first;
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    const Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << (a != 1 ? "*x" : "x");
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& p) {
  std::vector<Rational> v(p.coeffs_);
  for (auto& c : v) c = -c;
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return RationalPoly(std::move(v));
}

std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational& lb = b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[k + db] / lb;
    q.canonicalize();
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    rem[k + db] = 0;
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a.primitive_positive();
  RationalPoly y = b.primitive_positive();
  while (!y.is_zero()) {
    RationalPoly r = divrem(x, y).second.primitive_positive();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return (1 / x.leading()) * x;
}

RationalPoly parse_poly(std::string_view text) {
  std::vector<Rational> v;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) v.push_back(parse_rational(tok));
    tok.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') flush();
    else tok.push_back(c);
  }
  flush();
  if (v.empty()) throw std::invalid_argument("empty coefficient list");
  return RationalPoly(std::move(v));
}

}  // namespace hmz
