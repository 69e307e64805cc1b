#include <doctest.h>

#include <cmath>
#include <limits>

#include "hmz/errors.hpp"
#include "hmz/named_polys.hpp"
#include "hmz/registry.hpp"
#include "hmz/report.hpp"

using namespace hmz;
using nlohmann::json;

namespace {

std::vector<ClaimReport> sample_rows() {
  SuiteOptions opts;
  opts.grid_n = 200;
  return run_suite({"D5", "Z2", "X1", "S3"}, opts).rows;
}

}  // namespace

TEST_CASE("JSON schema") {
  const json j = to_json(sample_rows());
  REQUIRE(j.is_array());
  for (const auto& o : j) {
    for (const char* k : {"claim_id", "status", "kind", "domain", "grid", "min_margin", "argmin_x",
                          "paper_ref", "notes"}) {
      CHECK_MESSAGE(o.contains(k), k);
    }
    CHECK(o.size() == 9);
    CHECK(o["domain"].size() == 2);
    if (!o["grid"].is_null()) {
      CHECK(o["grid"].contains("n"));
      CHECK(o["grid"].contains("spacing"));
      CHECK(o["grid"].contains("eps"));
    }
  }
}

TEST_CASE("canonical JSON round-trips byte for byte") {
  const std::string text = canonical_dump(to_json(sample_rows()));
  const std::string again = canonical_dump(json::parse(text));
  CHECK(text == again);
  // keys come out sorted
  CHECK(text.find("\"argmin_x\"") < text.find("\"claim_id\""));
  // 17 significant digits
  CHECK(canonical_dump(json(0.1)) == "0.10000000000000001");
  CHECK(canonical_dump(json(std::numeric_limits<double>::infinity())) == "null");
}

TEST_CASE("reports read back") {
  const auto rows = sample_rows();
  const auto back = reports_from_json(json::parse(canonical_dump(to_json(rows))));
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].id == rows[i].id);
    CHECK(back[i].status == rows[i].status);
    CHECK(back[i].min_margin == rows[i].min_margin);
    CHECK(back[i].notes == rows[i].notes);
  }
  CHECK_THROWS_AS(reports_from_json(json::object()), DomainError);
  CHECK_THROWS_AS(report_from_json(json{{"claim_id", "x"}}), DomainError);
}

TEST_CASE("CSV and markdown") {
  const auto rows = sample_rows();
  const std::string csv = to_csv(rows);
  CHECK(csv.rfind("claim_id,status,kind,domain,grid,min_margin,argmin_x,paper_ref,notes\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= static_cast<long>(rows.size()) + 1);
  const std::string md = to_markdown(rows);
  CHECK(md.rfind("| claim |", 0) == 0);
  CHECK(md.find("D5.zero") != std::string::npos);
  CHECK(render({}, ReportFormat::Json) == "[]\n");
  CHECK(parse_report_format("md") == ReportFormat::Markdown);
  CHECK_THROWS_AS(parse_report_format("xml"), UnsupportedError);
}

TEST_CASE("certificate JSON") {
  const auto e = build_named_poly(PolyId::QUARTIC);
  const json j = to_json(certify_sign(e, 0, 1, 1));
  CHECK(j["poly_id"] == "QUARTIC");
  CHECK(j["root_count"] == 1);
  CHECK(j["interval"][0] == "0");
  CHECK(j["interval"][1] == "1");
  CHECK(j.contains("robust"));
  CHECK(j.contains("margin"));
  CHECK(j.contains("sign"));
}
