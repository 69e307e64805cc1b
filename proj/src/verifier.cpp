#include "hmz/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hmz/errors.hpp"

namespace hmz {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void append_note(std::string& notes, const std::string& s) {
  if (!notes.empty()) notes += "; ";
  notes += s;
}

ClaimReport base_report(const std::string& id, CheckKind kind, const GridSpec& grid) {
  ClaimReport r;
  r.id = id;
  r.kind = kind;
  r.domain_a = grid.a;
  r.domain_b = grid.b;
  r.grid = grid;
  r.min_margin = kInf;
  return r;
}

// Grid points with poles (sign changes of opts.pole_indicator) cut out.
struct SampledGrid {
  std::vector<double> x;
  std::vector<double> poles;
  int removed = 0;
};

SampledGrid sample(const GridSpec& grid, const ScanOptions& opts) {
  SampledGrid out;
  std::vector<double> xs = grid.points();
  if (!opts.pole_indicator) {
    out.x = std::move(xs);
    return out;
  }
  std::vector<double> d(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) d[i] = opts.pole_indicator(xs[i]);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (d[i] == 0.0) {
      out.poles.push_back(xs[i]);
    } else if ((d[i] < 0) != (d[i + 1] < 0) && d[i + 1] != 0.0) {
      out.poles.push_back(find_root(opts.pole_indicator, xs[i], xs[i + 1], 1e-14));
    }
  }
  for (double x : xs) {
    const bool near = std::any_of(out.poles.begin(), out.poles.end(),
                                  [&](double p) { return std::abs(x - p) < opts.pole_gap; });
    if (near) ++out.removed;
    else out.x.push_back(x);
  }
  return out;
}

void note_poles(ClaimReport& r, const SampledGrid& s, const ScanOptions& opts) {
  for (double p : s.poles) {
    append_note(r.notes, "pole at x=" + fmt(p) + ", skipped +/-" + fmt(opts.pole_gap));
  }
}

void finish_strict(ClaimReport& r, bool strict, const ScanOptions& opts) {
  if (strict) r.status = r.min_margin > opts.margin_floor ? Status::Pass : Status::Fail;
  else r.status = r.min_margin >= -opts.nonstrict_slack ? Status::Pass : Status::Fail;
  if (!std::isfinite(r.min_margin) && r.min_margin != kInf) r.status = Status::Fail;
}

// Better = smaller margin, ties toward smaller x.
bool better(double m, double x, double best_m, double best_x) {
  return m < best_m || (m == best_m && x < best_x);
}

}  // namespace

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::POINTWISE: return "POINTWISE";
    case CheckKind::MONOTONE: return "MONOTONE";
    case CheckKind::CONVEX: return "CONVEX";
    case CheckKind::CONCAVE: return "CONCAVE";
    case CheckKind::ROOT_COUNT: return "ROOT_COUNT";
    case CheckKind::ROOT_LOCATE: return "ROOT_LOCATE";
    case CheckKind::LIMIT: return "LIMIT";
    case CheckKind::IDENTITY: return "IDENTITY";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Spacing s) { return s == Spacing::Linear ? "linear" : "log"; }

std::vector<double> GridSpec::points() const {
  if (n < 1) throw DomainError("grid: needs at least one point");
  const double lo = a + eps;
  const double hi = b - eps;
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("grid: empty interval after endpoint exclusion");
  }
  if (spacing == Spacing::Log && !(lo > 0)) throw DomainError("grid: log spacing needs a > -eps");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  // i/(n+1), i = 1..n keeps every point off the excluded endpoints
  for (int i = 1; i <= n; ++i) {
    const double f = static_cast<double>(i) / (n + 1);
    xs.push_back(spacing == Spacing::Linear ? lo + (hi - lo) * f
                                            : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f));
  }
  return xs;
}

bool is_strict(Relation r) { return r == Relation::Less || r == Relation::Greater; }

ClaimReport check_pointwise(const std::string& id, const Fn& lhs, Relation rel, const Fn& rhs,
                            const GridSpec& grid, const ScanOptions& opts) {
  ClaimReport r = base_report(id, CheckKind::POINTWISE, grid);
  const double sgn = (rel == Relation::Less || rel == Relation::LessEq) ? 1.0 : -1.0;
  int singular = 0;
  auto margin = [&](double x, double& out) {
    try {
      out = sgn * (rhs(x) - lhs(x));
      if (std::isnan(out)) out = -kInf;
      return true;
    } catch (const HarmonicMeanPole&) {
      ++singular;
      return false;
    }
  };
  const SampledGrid s = sample(grid, opts);
  note_poles(r, s, opts);
  if (s.x.empty()) throw DomainError("check_pointwise: no grid points left");
  std::size_t best_i = 0;
  double best = kInf, best_x = s.x.front();
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    double m;
    ++r.points;
    if (!margin(s.x[i], m)) continue;
    if (better(m, s.x[i], best, best_x)) {
      best = m;
      best_x = s.x[i];
      best_i = i;
    }
  }
  // bisection refinement around the worst grid point
  double lo = best_i > 0 ? s.x[best_i - 1] : s.x[best_i];
  double hi = best_i + 1 < s.x.size() ? s.x[best_i + 1] : s.x[best_i];
  for (int d = 0; d < grid.refine && std::isfinite(best); ++d) {
    const double m1x = 0.5 * (lo + best_x), m2x = 0.5 * (best_x + hi);
    double m1 = kInf, m2 = kInf;
    const bool ok1 = m1x != best_x && margin(m1x, m1);
    const bool ok2 = m2x != best_x && margin(m2x, m2);
    r.points += 2;
    if (ok1 && better(m1, m1x, best, best_x) && (!ok2 || better(m1, m1x, m2, m2x))) {
      hi = best_x;
      best = m1;
      best_x = m1x;
    } else if (ok2 && better(m2, m2x, best, best_x)) {
      lo = best_x;
      best = m2;
      best_x = m2x;
    } else {
      lo = m1x;
      hi = m2x;
    }
  }
  r.min_margin = best;
  r.argmin_x = best_x;
  if (singular > 0) append_note(r.notes, std::to_string(singular) + " singular point(s) skipped");
  finish_strict(r, is_strict(rel), opts);
  return r;
}

ClaimReport check_monotone(const std::string& id, const Fn& f, const GridSpec& grid,
                           int direction, const ScanOptions& opts) {
  if (direction != 1 && direction != -1) throw DomainError("check_monotone: direction must be +-1");
  ClaimReport r = base_report(id, CheckKind::MONOTONE, grid);
  const SampledGrid s = sample(grid, opts);
  note_poles(r, s, opts);
  if (s.x.size() < 2) throw DomainError("check_monotone: need at least two grid points");
  std::vector<double> v(s.x.size());
  for (std::size_t i = 0; i < s.x.size(); ++i) v[i] = f(s.x[i]);
  r.points = static_cast<long>(s.x.size());
  double best = kInf, best_x = s.x.front();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i + 1 < s.x.size(); ++i) {
    double m = direction * (v[i + 1] - v[i]) / (s.x[i + 1] - s.x[i]);
    if (std::isnan(m)) m = -kInf;
    if (better(m, s.x[i], best, best_x)) {
      best = m;
      best_x = s.x[i];
      best_i = i;
    }
  }
  // one refinement pass: split the worst step
  {
    const double x0 = s.x[best_i], x1 = s.x[best_i + 1];
    const double xm = 0.5 * (x0 + x1);
    const double fm = f(xm);
    ++r.points;
    const double m0 = direction * (fm - v[best_i]) / (xm - x0);
    const double m1 = direction * (v[best_i + 1] - fm) / (x1 - xm);
    if (better(m0, x0, best, best_x)) {
      best = m0;
      best_x = x0;
    }
    if (better(m1, xm, best, best_x)) {
      best = m1;
      best_x = xm;
    }
  }
  r.min_margin = best;
  r.argmin_x = best_x;
  finish_strict(r, true, opts);
  return r;
}

ClaimReport check_convexity(const std::string& id, const Fn& f, const GridSpec& grid,
                            Curvature curvature, const ScanOptions& opts, bool refute) {
  ClaimReport r = base_report(id, curvature == Curvature::Convex ? CheckKind::CONVEX
                                                                  : CheckKind::CONCAVE, grid);
  const SampledGrid s = sample(grid, opts);
  note_poles(r, s, opts);
  if (s.x.size() < 3) throw DomainError("check_convexity: need at least three grid points");
  const double c = curvature == Curvature::Convex ? 1.0 : -1.0;
  // refute: the worst-curved point is the largest violation, reported as a positive margin
  std::vector<double> v(s.x.size());
  for (std::size_t i = 0; i < s.x.size(); ++i) v[i] = f(s.x[i]);
  r.points = static_cast<long>(s.x.size());
  auto second = [](double x0, double f0, double x1, double f1, double x2, double f2) {
    const double h1 = x1 - x0, h2 = x2 - x1;
    return 2.0 * ((f2 - f1) / h2 - (f1 - f0) / h1) / (h1 + h2);
  };
  double best = kInf, best_x = s.x[1];
  for (std::size_t i = 1; i + 1 < s.x.size(); ++i) {
    double m = c * second(s.x[i - 1], v[i - 1], s.x[i], v[i], s.x[i + 1], v[i + 1]);
    if (std::isnan(m)) m = -kInf;
    if (better(m, s.x[i], best, best_x)) {
      best = m;
      best_x = s.x[i];
    }
  }
  // one refinement pass at half the local step
  {
    auto it = std::lower_bound(s.x.begin(), s.x.end(), best_x);
    const std::size_t i = static_cast<std::size_t>(it - s.x.begin());
    if (i > 0 && i + 1 < s.x.size()) {
      const double h = 0.25 * (s.x[i + 1] - s.x[i - 1]);
      const double xa = best_x - h, xb = best_x + h;
      const double m = c * second(xa, f(xa), best_x, v[i], xb, f(xb));
      r.points += 2;
      if (!std::isnan(m) && m < best) best = m;
    }
  }
  r.min_margin = refute ? -best : best;
  r.argmin_x = best_x;
  if (refute) {
    r.status = r.min_margin > opts.margin_floor ? Status::Pass : Status::Fail;
    append_note(r.notes, "refutation: margin is the largest violation found");
  } else {
    finish_strict(r, true, opts);
  }
  return r;
}

ClaimReport check_limit(const std::string& id, const Fn& f, const LimitSpec& spec) {
  if (spec.offsets.empty()) throw DomainError("check_limit: empty approach sequence");
  ClaimReport r;
  r.id = id;
  r.kind = CheckKind::LIMIT;
  r.domain_a = r.domain_b = spec.side == 0 ? kInf : spec.endpoint;
  const bool to_minus_inf = spec.expected == -kInf;
  double prev_err = kInf, prev_val = kInf, last_x = 0;
  bool monotone = true;
  double last_err = kInf, last_val = 0;
  for (double d : spec.offsets) {
    const double x = spec.side == 0 ? 1.0 / d : spec.endpoint + spec.side * d;
    const double val = f(x);
    ++r.points;
    last_x = x;
    last_val = val;
    if (to_minus_inf) {
      if (!(val < prev_val)) monotone = false;
      prev_val = val;
    } else {
      const double err = std::abs(val - spec.expected);
      if (std::isnan(err) || err > prev_err + 1e-12) monotone = false;
      prev_err = err;
      last_err = err;
    }
  }
  r.argmin_x = last_x;
  if (to_minus_inf) {
    r.min_margin = -1e6 - last_val;
    append_note(r.notes, "last value " + fmt(last_val));
  } else {
    r.min_margin = spec.tol - last_err;
    append_note(r.notes, "last value " + fmt(last_val) + ", |error| " + fmt(last_err));
  }
  if (!monotone) {
    r.status = Status::Inconclusive;
    append_note(r.notes, "approach sequence not monotone");
  } else {
    r.status = r.min_margin > 0 ? Status::Pass : Status::Fail;
  }
  return r;
}

double find_root(const Fn& f, double a, double b, double tol) {
  if (!(a < b)) throw BracketError("find_root: requires a < b");
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0) == (fb < 0)) {
    throw BracketError("find_root: no sign change on [" + fmt(a) + ", " + fmt(b) + "]");
  }
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

ClaimReport check_value(const std::string& id, double value, double expected, double tol,
                        double at) {
  ClaimReport r;
  r.id = id;
  r.kind = CheckKind::IDENTITY;
  r.domain_a = r.domain_b = at;
  r.argmin_x = at;
  r.points = 1;
  r.min_margin = tol - std::abs(value - expected);
  if (std::isnan(r.min_margin)) r.min_margin = -kInf;
  r.status = r.min_margin >= 0 ? Status::Pass : Status::Fail;
  append_note(r.notes, "value " + fmt(value) + ", expected " + fmt(expected) + " +/- " + fmt(tol));
  return r;
}

ClaimReport check_identity(const std::string& id, const Fn& lhs, const Fn& rhs,
                           const GridSpec& grid, double tol) {
  ClaimReport r = base_report(id, CheckKind::IDENTITY, grid);
  double worst = 0, worst_x = grid.a;
  bool first = true;
  for (double x : grid.points()) {
    double d = std::abs(lhs(x) - rhs(x));
    if (std::isnan(d)) d = kInf;
    ++r.points;
    if (first || d > worst) {
      worst = d;
      worst_x = x;
      first = false;
    }
  }
  r.min_margin = tol - worst;
  r.argmin_x = worst_x;
  r.status = r.min_margin >= 0 ? Status::Pass : Status::Fail;
  return r;
}

}  // namespace hmz
