#include <doctest.h>

#include <set>
#include <string>

#include "hmz/errors.hpp"
#include "hmz/registry.hpp"

using namespace hmz;

TEST_CASE("every claim family is registered") {
  std::vector<std::string> expected;
  for (int i = 1; i <= 10; ++i) expected.push_back("D" + std::to_string(i));
  for (int i = 1; i <= 24; ++i) expected.push_back("Z" + std::to_string(i));
  expected.push_back("X1");
  for (int i = 1; i <= 5; ++i) expected.push_back("S" + std::to_string(i));
  std::set<std::string> have;
  for (const auto& c : registry()) have.insert(c.id);
  for (const auto& id : expected) CHECK_MESSAGE(have.count(id) == 1, id);
  CHECK(have.size() == expected.size());
}

TEST_CASE("claims are well formed") {
  std::set<std::string> check_ids;
  for (const auto& c : registry()) {
    CHECK_FALSE(c.group.empty());
    CHECK_FALSE(c.statement.empty());
    REQUIRE_FALSE(c.checks.empty());
    for (const auto& chk : c.checks) {
      CHECK(chk.id.rfind(c.id + ".", 0) == 0);
      CHECK(check_ids.insert(chk.id).second);
      CHECK(static_cast<bool>(chk.run));
    }
  }
  CHECK(find_claim("Z13").checks.size() == 3);
  CHECK_THROWS_AS(find_claim("Z99"), LookupError);
}

TEST_CASE("selection") {
  CHECK(run_suite({}).rows.empty());
  CHECK(run_suite({}).all_pass());
  CHECK_THROWS_AS(run_suite({"D1", "NOPE"}), LookupError);
  const SuiteReport r = run_suite({"Z24", "D6"});
  // registry order, not request order
  REQUIRE(r.claims.size() == 2);
  CHECK(r.claims[0].id == "D6");
  CHECK(r.claims[1].id == "Z24");
}

TEST_CASE("threaded runs are deterministic") {
  SuiteOptions one;
  one.grid_n = 300;
  SuiteOptions many = one;
  many.threads = 4;
  const SuiteReport a = run_suite({"D1", "Z3", "Z19", "S3"}, one);
  const SuiteReport b = run_suite({"D1", "Z3", "Z19", "S3"}, many);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].id == b.rows[i].id);
    CHECK(a.rows[i].min_margin == b.rows[i].min_margin);
    CHECK(a.rows[i].argmin_x == b.rows[i].argmin_x);
    CHECK(a.rows[i].status == b.rows[i].status);
  }
}

TEST_CASE("a coarse full run raises no internal errors") {
  SuiteOptions opts;
  opts.grid_n = 200;
  opts.threads = 4;
  const SuiteReport r = run_suite({"all"}, opts);
  CHECK(r.claims.size() == registry().size());
  for (const auto& row : r.rows) {
    CHECK_MESSAGE(row.notes.find("error:") == std::string::npos, row.id, ": ", row.notes);
    CHECK(row.statement.size() > 0);
  }
}
