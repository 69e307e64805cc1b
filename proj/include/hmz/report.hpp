#pragma once

// Serialisation of claim reports and polynomial certificates.
// JSON is canonical: sorted keys, doubles printed with 17 significant digits,
// non-finite numbers as null, so parse -> dump reproduces the bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "hmz/named_polys.hpp"
#include "hmz/verifier.hpp"

namespace hmz {

enum class ReportFormat { Json, Csv, Markdown };

/// "json", "csv", "md" (also "markdown"). Throws UnsupportedError otherwise.
ReportFormat parse_report_format(const std::string& s);

std::string canonical_dump(const nlohmann::json& j);

nlohmann::json to_json(const ClaimReport& r);
nlohmann::json to_json(const std::vector<ClaimReport>& rows);
nlohmann::json to_json(const Certificate& c);

/// Inverse of to_json(ClaimReport) for rows saved by an earlier run. The
/// statement comes back from "paper_ref"; point counts are not stored.
ClaimReport report_from_json(const nlohmann::json& j);
std::vector<ClaimReport> reports_from_json(const nlohmann::json& j);

std::string to_csv(const std::vector<ClaimReport>& rows);
std::string to_markdown(const std::vector<ClaimReport>& rows);

std::string render(const std::vector<ClaimReport>& rows, ReportFormat fmt);

}  // namespace hmz
