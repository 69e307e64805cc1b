#include "hmz/stieltjes.hpp"

#include <algorithm>
#include <array>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <iomanip>
#include <istream>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "hmz/errors.hpp"

namespace hmz {
namespace {

using Real = boost::multiprecision::mpfr_float_50;

// Ascending coefficients of a polynomial in L = log x.
using LogPoly = std::vector<Real>;

// f^(r)(x) = x^{-(r+1)} P_r(log x) for f(x) = (log x)^n / x, with
// P_{r+1} = P_r' - (r+1) P_r.
std::vector<LogPoly> derivative_polys(int n, int max_order) {
  std::vector<LogPoly> out;
  LogPoly p(n + 1, Real(0));
  p[n] = 1;
  out.push_back(p);
  for (int r = 0; r < max_order; ++r) {
    LogPoly next(n + 1, Real(0));
    for (int i = 1; i <= n; ++i) next[i - 1] += Real(i) * p[i];
    for (int i = 0; i <= n; ++i) next[i] -= Real(r + 1) * p[i];
    out.push_back(next);
    p = std::move(next);
  }
  return out;
}

Real eval_log_poly(const LogPoly& p, const Real& L) {
  Real acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * L + *it;
  return acc;
}

// B_{2j}/(2j)! for j = 1..6
std::array<Real, 6> bernoulli_over_factorial() {
  const std::array<std::pair<long, long>, 6> b = {
      {{1, 6}, {-1, 30}, {1, 42}, {-1, 30}, {5, 66}, {-691, 2730}}};
  std::array<Real, 6> out;
  Real fact = 1;
  for (int j = 1; j <= 6; ++j) {
    fact *= Real(2 * j - 1) * Real(2 * j);
    out[j - 1] = Real(b[j - 1].first) / Real(b[j - 1].second) / fact;
  }
  return out;
}

std::string to_decimal(const Real& v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(42) << v;
  return os.str();
}

std::mutex g_table_mutex;
std::optional<StieltjesTable> g_pending;
std::once_flag g_table_once;
bool g_materialised = false;
const StieltjesTable* g_table = nullptr;

}  // namespace

StieltjesTable compute_stieltjes_table(int max_index,
                                       const StieltjesOracleOptions& opts) {
  if (max_index < 0) throw UnsupportedError("stieltjes table: negative index");
  if (opts.cutoffs.empty() || opts.em_terms < 1 || opts.em_terms > 6) {
    throw UnsupportedError("stieltjes oracle: bad options");
  }
  std::vector<long> cutoffs = opts.cutoffs;
  std::sort(cutoffs.begin(), cutoffs.end());

  const int N = max_index;
  const auto bf = bernoulli_over_factorial();
  std::vector<std::vector<LogPoly>> dpolys;
  for (int n = 0; n <= N; ++n) dpolys.push_back(derivative_polys(n, 2 * opts.em_terms));

  std::vector<Real> partial(N + 1, Real(0));
  std::vector<std::vector<Real>> estimates(N + 1);
  std::size_t next_cut = 0;
  const long m_max = cutoffs.back();
  for (long k = 1; k <= m_max; ++k) {
    const Real L = log(Real(k));
    Real term = Real(1) / Real(k);
    for (int n = 0; n <= N; ++n) {
      partial[n] += term;
      term *= L;
    }
    if (k != cutoffs[next_cut]) continue;
    ++next_cut;
    const Real m = Real(k);
    for (int n = 0; n <= N; ++n) {
      Real est = partial[n] - pow(L, n + 1) / Real(n + 1);
      est -= eval_log_poly(dpolys[n][0], L) / m / 2;
      for (int j = 1; j <= opts.em_terms; ++j) {
        const int r = 2 * j - 1;
        est -= bf[j - 1] * eval_log_poly(dpolys[n][r], L) / pow(m, r + 1);
      }
      estimates[n].push_back(est);
    }
  }

  StieltjesTable table;
  const Real Lmax = log(Real(m_max));
  for (int n = 0; n <= N; ++n) {
    const Real& best = estimates[n].back();
    Real spread = 0;
    for (const Real& e : estimates[n]) spread = max(spread, Real(abs(e - best)));
    // summation rounding in 50-digit arithmetic
    const Real rounding = Real(m_max) * Real("1e-49") * max(Real(1), pow(Lmax, n + 1));
    const Real err = spread + rounding;
    table.gamma.push_back(static_cast<double>(best));
    table.prec.push_back(std::max(static_cast<double>(err), 1e-300));
    table.decimal.push_back(to_decimal(best));
  }
  return table;
}

const StieltjesTable& stieltjes_table() {
  std::call_once(g_table_once, [] {
    std::lock_guard lock(g_table_mutex);
    static StieltjesTable storage =
        g_pending ? std::move(*g_pending) : compute_stieltjes_table();
    g_pending.reset();
    g_table = &storage;
    g_materialised = true;
  });
  return *g_table;
}

bool install_stieltjes_table(StieltjesTable table) {
  std::lock_guard lock(g_table_mutex);
  if (g_materialised) return false;
  if (table.size() < 11) throw UnsupportedError("stieltjes table: need gamma_0..gamma_10");
  g_pending = std::move(table);
  return true;
}

double stieltjes(int n) {
  const auto& t = stieltjes_table();
  if (n < 0 || static_cast<std::size_t>(n) > t.max_index()) {
    throw UnsupportedError("stieltjes: index " + std::to_string(n) +
                           " outside 0.." + std::to_string(t.max_index()));
  }
  return t.gamma[n];
}

double stieltjes_bound(int n) {
  if (n < 1) throw UnsupportedError("stieltjes_bound: index must be >= 1");
  const double pi = std::numbers::pi;
  // even n = 2m: 4 (n-1)! / pi^n ; odd n = 2m+1: 2 (n-1)! / pi^n
  const double c = (n % 2 == 0) ? 4.0 : 2.0;
  if (n < 150) return c * std::tgamma(static_cast<double>(n)) / std::pow(pi, n);
  return c * std::exp(std::lgamma(static_cast<double>(n)) - n * std::log(pi));
}

double lavrik_bound(int k) {
  if (k < 1) throw UnsupportedError("lavrik_bound: index must be >= 1");
  if (k < 150) return std::tgamma(k + 1.0) / std::ldexp(1.0, k + 1);
  return std::exp(std::lgamma(k + 1.0) - (k + 1) * std::log(2.0));
}

void write_stieltjes_cache(const StieltjesTable& table, std::ostream& out) {
  for (std::size_t n = 0; n < table.size(); ++n) {
    const std::string value = n < table.decimal.size() && !table.decimal[n].empty()
                                  ? table.decimal[n]
                                  : [&] {
                                      std::ostringstream os;
                                      os << std::setprecision(17) << table.gamma[n];
                                      return os.str();
                                    }();
    std::ostringstream err;
    err << std::setprecision(17) << table.prec[n];
    out << n << ' ' << value << ' ' << err.str() << '\n';
  }
}

StieltjesTable read_stieltjes_cache(std::istream& in) {
  StieltjesTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::size_t index = 0;
    std::string value;
    double err = 0.0;
    if (!(ls >> index >> value >> err) || index != table.size() || !(err >= 0.0)) {
      throw DomainError("stieltjes cache: malformed line " + std::to_string(lineno));
    }
    table.gamma.push_back(std::stod(value));
    table.prec.push_back(err);
    table.decimal.push_back(value);
  }
  if (table.size() == 0) throw DomainError("stieltjes cache: empty");
  return table;
}

}  // namespace hmz
