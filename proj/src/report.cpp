#include "hmz/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hmz/errors.hpp"

namespace hmz {

using nlohmann::json;

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "md" || s == "markdown") return ReportFormat::Markdown;
  throw UnsupportedError("unknown report format '" + s + "' (expected json, csv or md)");
}

namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump_to(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {  // std::map keeps keys sorted
        if (!first) out += ',';
        first = false;
        out += json(k).dump();
        out += ':';
        dump_to(v, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_to(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string short_num(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_to(j, out);
  return out;
}

json to_json(const ClaimReport& r) {
  json j;
  j["claim_id"] = r.id;
  j["status"] = to_string(r.status);
  j["kind"] = to_string(r.kind);
  j["domain"] = json::array({num(r.domain_a), num(r.domain_b)});
  if (r.grid) {
    j["grid"] = {{"n", r.grid->n}, {"spacing", to_string(r.grid->spacing)}, {"eps", r.grid->eps}};
  } else {
    j["grid"] = nullptr;
  }
  j["min_margin"] = num(r.min_margin);
  j["argmin_x"] = num(r.argmin_x);
  j["paper_ref"] = r.statement;
  j["notes"] = r.notes;
  return j;
}

json to_json(const std::vector<ClaimReport>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

json to_json(const Certificate& c) {
  json j;
  j["poly_id"] = c.poly_id;
  j["interval"] = json::array({c.a.get_str(), c.to_infinity ? std::string("inf") : c.b.get_str()});
  j["root_count"] = c.root_count + c.tail_root_count;
  j["sign"] = c.sign;
  j["margin"] = num(c.margin);
  j["perturbation_bound"] = num(c.perturbation_bound);
  j["robust"] = c.robust;
  j["endpoints_perturbed"] = c.perturbed;
  j["cauchy_bound"] = c.root_bound ? num(*c.root_bound) : json(nullptr);
  return j;
}

namespace {

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> values) {
  for (E v : values) {
    if (s == to_string(v)) return v;
  }
  throw DomainError("report: unrecognised value '" + s + "'");
}

double num_from(const json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

}  // namespace

ClaimReport report_from_json(const json& j) {
  ClaimReport r;
  try {
    r.id = j.at("claim_id").get<std::string>();
    r.status = enum_from(j.at("status").get<std::string>(),
                         {Status::Pass, Status::Fail, Status::Inconclusive});
    r.kind = enum_from(j.at("kind").get<std::string>(),
                       {CheckKind::POINTWISE, CheckKind::MONOTONE, CheckKind::CONVEX,
                        CheckKind::CONCAVE, CheckKind::ROOT_COUNT, CheckKind::ROOT_LOCATE,
                        CheckKind::LIMIT, CheckKind::IDENTITY});
    r.domain_a = num_from(j.at("domain").at(0));
    r.domain_b = num_from(j.at("domain").at(1));
    const json& g = j.at("grid");
    if (!g.is_null()) {
      GridSpec spec;
      spec.n = g.at("n").get<int>();
      spec.eps = g.at("eps").get<double>();
      spec.spacing = enum_from(g.at("spacing").get<std::string>(), {Spacing::Linear, Spacing::Log});
      spec.a = r.domain_a;
      spec.b = r.domain_b;
      r.grid = spec;
    }
    r.min_margin = num_from(j.at("min_margin"));
    r.argmin_x = num_from(j.at("argmin_x"));
    r.statement = j.at("paper_ref").get<std::string>();
    r.notes = j.at("notes").get<std::string>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("report: malformed claim object: ") + e.what());
  }
  return r;
}

std::vector<ClaimReport> reports_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("report: expected a JSON array of claim objects");
  std::vector<ClaimReport> rows;
  for (const auto& e : j) rows.push_back(report_from_json(e));
  return rows;
}

std::string to_csv(const std::vector<ClaimReport>& rows) {
  std::ostringstream os;
  os << "claim_id,status,kind,domain,grid,min_margin,argmin_x,paper_ref,notes\n";
  for (const auto& r : rows) {
    const json j = to_json(r);
    os << csv_cell(r.id) << ',' << to_string(r.status) << ',' << to_string(r.kind) << ','
       << csv_cell(canonical_dump(j["domain"])) << ',' << csv_cell(canonical_dump(j["grid"]))
       << ',' << number(r.min_margin) << ',' << number(r.argmin_x) << ','
       << csv_cell(r.statement) << ',' << csv_cell(r.notes) << '\n';
  }
  return os.str();
}

std::string to_markdown(const std::vector<ClaimReport>& rows) {
  std::ostringstream os;
  os << "| claim | status | kind | domain | grid | min margin | argmin x | statement | notes |\n"
     << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    std::string grid = "-";
    if (r.grid) grid = std::to_string(r.grid->n) + " " + to_string(r.grid->spacing);
    os << "| " << md_cell(r.id) << " | " << to_string(r.status) << " | " << to_string(r.kind)
       << " | (" << short_num(r.domain_a) << ", " << short_num(r.domain_b) << ") | " << grid
       << " | " << short_num(r.min_margin) << " | " << short_num(r.argmin_x) << " | "
       << md_cell(r.statement) << " | " << md_cell(r.notes) << " |\n";
  }
  return os.str();
}

std::string render(const std::vector<ClaimReport>& rows, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json:
      return canonical_dump(to_json(rows)) + "\n";
    case ReportFormat::Csv:
      return to_csv(rows);
    case ReportFormat::Markdown:
      return to_markdown(rows);
  }
  return {};
}

}  // namespace hmz
