#pragma once

// The fixed set of claims verified by the suite. A claim groups one or more
// checks; each check produces one report row (ids like "Z3.concave").

#include <functional>
#include <string>
#include <vector>

#include "hmz/verifier.hpp"

namespace hmz {

struct SuiteOptions {
  int grid_n = 2000;
  double margin_floor = 1e-9;
  int threads = 1;
};

struct CheckDef {
  std::string id;
  std::string statement;
  std::function<ClaimReport(const SuiteOptions&)> run;
};

struct ClaimDef {
  std::string id;
  std::string group;      // which published result the claim belongs to
  std::string statement;  // the claim in plain math
  std::vector<CheckDef> checks;
};

const std::vector<ClaimDef>& registry();
const ClaimDef& find_claim(const std::string& id);

struct ClaimStatus {
  std::string id;
  Status status;
};

struct SuiteReport {
  std::vector<ClaimReport> rows;     // registry order
  std::vector<ClaimStatus> claims;   // pass iff every row of the claim passes
  double seconds = 0;
  bool all_pass() const;
};

/// ids: claim ids, or "all". Unknown ids raise LookupError naming all of
/// them. A check that throws is reported as failed with the message in notes.
SuiteReport run_suite(const std::vector<std::string>& ids, const SuiteOptions& opts = {});

}  // namespace hmz
