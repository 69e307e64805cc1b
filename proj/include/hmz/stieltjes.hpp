#pragma once

// Stieltjes constants gamma_n (Laurent coefficients of zeta about s = 1),
// their high-precision oracle, the classical bounds, and a text cache.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hmz {

struct StieltjesTable {
  std::vector<double> gamma;         // gamma[0] is Euler's constant
  std::vector<double> prec;          // absolute-error bound per entry
  std::vector<std::string> decimal;  // >= 40 significant digits per entry

  std::size_t max_index() const { return gamma.empty() ? 0 : gamma.size() - 1; }
  std::size_t size() const { return gamma.size(); }
};

struct StieltjesOracleOptions {
  // Euler-Maclaurin cut-offs m; the estimate at the last one is reported and
  // the spread across all of them is folded into the error bound.
  std::vector<long> cutoffs = {10000, 30000, 100000};
  int em_terms = 6;  // Bernoulli corrections B_2 .. B_{2*em_terms}
};

inline constexpr int kDefaultStieltjesMaxIndex = 20;

/// Evaluates gamma_n = lim_m (sum_{k<=m} (log k)^n / k - (log m)^{n+1}/(n+1))
/// for n = 0..max_index in 50-digit arithmetic with Euler-Maclaurin tail
/// corrections at each cut-off.
StieltjesTable compute_stieltjes_table(int max_index = kDefaultStieltjesMaxIndex,
                                       const StieltjesOracleOptions& opts = {});

/// Process-wide table. Built on first use (or taken from an installed table)
/// and immutable afterwards.
const StieltjesTable& stieltjes_table();

/// Installs a precomputed table (e.g. loaded from a cache file). Returns false
/// when the process-wide table has already been materialised.
bool install_stieltjes_table(StieltjesTable table);

/// gamma_n from the process-wide table. Throws UnsupportedError past the end.
double stieltjes(int n);

/// 4(2m-1)!/pi^{2m} for n = 2m (m >= 1), 2(2m)!/pi^{2m+1} for n = 2m+1.
/// Index 0 is rejected: the even formula needs (-1)!.
double stieltjes_bound(int n);

/// k!/2^{k+1}, k >= 1.
double lavrik_bound(int k);

// Cache format: one line per constant, "index value abs_error".
void write_stieltjes_cache(const StieltjesTable& table, std::ostream& out);
StieltjesTable read_stieltjes_cache(std::istream& in);

}  // namespace hmz
