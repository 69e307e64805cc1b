#include "hmz/sturm.hpp"

#include <algorithm>

#include "hmz/errors.hpp"

namespace hmz {

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("sturm_sequence: zero polynomial");
  std::vector<RationalPoly> chain;
  chain.push_back(p.square_free().primitive_positive());
  if (chain[0].degree() == 0) return chain;
  chain.push_back(chain[0].derivative().primitive_positive());
  while (true) {
    const auto& prev = chain[chain.size() - 2];
    const auto& cur = chain.back();
    RationalPoly r = divrem(prev, cur).second;
    if (r.is_zero()) break;
    // -rem scaled by a positive rational: keep the sign of -rem's leading term
    RationalPoly next = (-r).primitive_positive();
    if (sign(r.leading()) > 0) next = -next;
    chain.push_back(std::move(next));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RootCount count_roots_detailed(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DomainError("count_roots_in: zero polynomial");
  if (!(a < b)) throw DomainError("count_roots_in: requires a < b");
  RootCount out{0, a, b, false};
  Rational shift = kEndpointShift;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    const bool za = sign(p(out.a)) == 0;
    const bool zb = sign(p(out.b)) == 0;
    if (!za && !zb) break;
    if (attempt == 3 || shift * 2 >= b - a) {
      throw EndpointRootError("count_roots_in: endpoint is a root after perturbation");
    }
    if (za) out.a = a + shift;
    if (zb) out.b = b - shift;
    out.perturbed = true;
    shift /= 2;
  }
  const auto chain = sturm_sequence(p);
  out.count = sign_variations(chain, out.a) - sign_variations(chain, out.b);
  return out;
}

int count_roots_in(const RationalPoly& p, const Rational& a, const Rational& b) {
  return count_roots_detailed(p, a, b).count;
}

Rational cauchy_root_bound(const RationalPoly& p) {
  if (p.degree() < 1) throw DomainError("cauchy_root_bound: degree must be >= 1");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.leading());
    if (r > m) m = r;
  }
  return 1 + m;
}

std::vector<RootInterval> isolate_roots(const RationalPoly& p, const Rational& a,
                                        const Rational& b, const Rational& width) {
  if (!(width > 0)) throw DomainError("isolate_roots: width must be positive");
  if (!(a < b)) throw DomainError("isolate_roots: requires a < b");
  const auto chain = sturm_sequence(p);
  auto count = [&](const Rational& lo, const Rational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
  };
  std::vector<RootInterval> out;
  // work list of half-open intervals (lo, hi]
  std::vector<RootInterval> work{{a, b}};
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    const int c = count(iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1 && iv.hi - iv.lo <= width) {
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    mid.canonicalize();
    work.push_back({mid, iv.hi});
    work.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace hmz
