#include "hmz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "hmz/catalog.hpp"
#include "hmz/config.hpp"
#include "hmz/digamma.hpp"
#include "hmz/errors.hpp"
#include "hmz/named_polys.hpp"
#include "hmz/registry.hpp"
#include "hmz/report.hpp"
#include "hmz/stieltjes.hpp"
#include "hmz/sturm.hpp"
#include "hmz/zeta.hpp"

namespace hmz {
namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Loads the cache when present; otherwise builds the table and writes it.
void prepare_stieltjes(const std::optional<std::string>& cache, bool recompute) {
  if (!cache) return;
  namespace fs = std::filesystem;
  if (!recompute && fs::exists(*cache)) {
    std::ifstream in(*cache);
    if (!in) throw DomainError("cannot read Stieltjes cache " + *cache);
    install_stieltjes_table(read_stieltjes_cache(in));
    return;
  }
  StieltjesTable t = compute_stieltjes_table();
  std::ofstream out(*cache);
  if (!out) throw DomainError("cannot write Stieltjes cache " + *cache);
  write_stieltjes_cache(t, out);
  install_stieltjes_table(std::move(t));
}

EvalResult eval_named(const std::string& name, double x, int deriv,
                      const std::vector<double>& params) {
  if (deriv < 0 || deriv > kMaxDerivative) {
    throw DomainError("derivative order must be in 0.." + std::to_string(kMaxDerivative));
  }
  if (deriv > 0) {
    if (name == "psi" || name == "digamma") return polygamma(deriv, x);
    if (name == "eta") return eta(x, deriv);
    if (name == "zeta") return zeta(x, deriv);
    throw UnsupportedError("--deriv is available for psi, eta and zeta only");
  }
  const auto id = parse_expr(name);
  if (!id) throw LookupError("unknown expression '" + name + "'");
  return aux_eval(*id, x, params);
}

struct ClaimLine {
  std::string id;
  Status status;
  int checks = 0;
  double worst_margin = 0;
  double worst_x = 0;
  std::string worst_check;
};

std::vector<ClaimLine> summarise(const SuiteReport& rep) {
  std::vector<ClaimLine> lines;
  for (const auto& c : rep.claims) {
    ClaimLine l{c.id, c.status, 0, std::numeric_limits<double>::infinity(), 0, ""};
    // the worst non-passing row wins over any passing one
    bool worst_passes = true;
    for (const auto& r : rep.rows) {
      if (r.id.rfind(c.id + ".", 0) != 0) continue;
      ++l.checks;
      const bool passes = r.status == Status::Pass;
      if (l.worst_check.empty() || (worst_passes && !passes) ||
          (passes == worst_passes && r.min_margin < l.worst_margin)) {
        l.worst_margin = r.min_margin;
        l.worst_x = r.argmin_x;
        l.worst_check = r.id;
        worst_passes = passes;
      }
    }
    lines.push_back(std::move(l));
  }
  return lines;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& s : raw) {
    std::string cur;
    for (char c : s + ",") {
      if (c == ',') {
        if (!cur.empty()) ids.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  return ids;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text) || !f.flush()) throw DomainError("cannot write " + path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical and exact checks for digamma and zeta inequalities", "hmzeta"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value settings file");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a kernel or catalog expression");
  std::string expr;
  double x = 0;
  int deriv = 0;
  std::vector<double> params;
  eval_cmd->add_option("expr", expr, "kernel (psi, eta, zeta, ...) or catalog id")->required();
  eval_cmd->add_option("x", x, "argument")->required();
  eval_cmd->add_option("--deriv,-d", deriv, "derivative order for psi, eta, zeta");
  eval_cmd->add_option("--param,-p", params, "expression parameter (repeatable)");
  bool list = false;
  eval_cmd->add_flag("--list", list, "list catalog expressions and exit");
  eval_cmd->get_option("expr")->required(false);
  eval_cmd->get_option("x")->required(false);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run claim checks");
  std::vector<std::string> verify_ids;
  bool verify_all = false, verbose = false;
  std::optional<int> grid_n, threads;
  std::optional<double> margin_floor;
  std::string json_path;
  verify_cmd->add_option("claims", verify_ids, "claim ids (comma or space separated)");
  verify_cmd->add_flag("--all", verify_all, "run every registered claim");
  verify_cmd->add_option("--grid-n", grid_n, "points per scan grid")->check(CLI::Range(3, 10000000));
  verify_cmd->add_option("--threads,-j", threads, "worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_option("--margin-floor", margin_floor, "strict-inequality margin floor");
  verify_cmd->add_option("--json", json_path, "also write the JSON report here");
  verify_cmd->add_flag("--verbose,-v", verbose, "print every check, not just claims");

  // sturm
  auto* sturm_cmd = app.add_subcommand("sturm", "Sturm root count and sign certificate");
  std::string poly_spec, a_text, b_text, sign_text;
  bool sturm_json = false;
  sturm_cmd->add_option("poly", poly_spec, "P, Q, P1, V, QUARTIC or ascending coefficients")->required();
  sturm_cmd->add_option("a", a_text, "left end (rational)")->required();
  sturm_cmd->add_option("b", b_text, "right end (rational or inf)")->required();
  sturm_cmd->add_option("--sign", sign_text, "expected sign on the interval (+ or -)")
      ->check(CLI::IsMember({"+", "-"}));
  sturm_cmd->add_flag("--json", sturm_json, "print the certificate as JSON");

  // stieltjes
  auto* st_cmd = app.add_subcommand("stieltjes", "Stieltjes constant and its bounds");
  int st_n = 0;
  bool recompute = false;
  std::string cache_path;
  st_cmd->add_option("n", st_n, "index")->required();
  st_cmd->add_flag("--recompute", recompute, "ignore the cache and rebuild the table");
  st_cmd->add_option("--cache", cache_path, "cache file (index value abs_error per line)");

  // report
  auto* rep_cmd = app.add_subcommand("report", "Write a claim report");
  std::string format_text = "json", out_path, from_path;
  std::optional<std::string> claims_text;
  std::optional<int> rep_grid_n;
  rep_cmd->add_option("--format,-f", format_text, "json, csv or md")
      ->multi_option_policy(CLI::MultiOptionPolicy::Throw)
      ->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
  rep_cmd->add_option("-o,--output", out_path, "output file (stdout when omitted)");
  rep_cmd->add_option("--claims", claims_text, "comma separated ids; default all, empty for none");
  rep_cmd->add_option("--from", from_path, "render a JSON report from an earlier run");
  rep_cmd->add_option("--grid-n", rep_grid_n, "points per scan grid")->check(CLI::Range(3, 10000000));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = load_config(config_path);

    if (eval_cmd->parsed()) {
      if (list) {
        for (const auto& e : catalog()) {
          out << e.name << (e.params ? " [" + std::to_string(e.params) + " param]" : "") << "  "
              << e.definition << "\n";
        }
        return kExitPass;
      }
      if (expr.empty() || eval_cmd->count("x") == 0) {
        err << "error: eval needs an expression and an argument\n";
        return kExitUsage;
      }
      prepare_stieltjes(cfg.stieltjes_cache, false);
      const EvalResult r = eval_named(expr, x, deriv, params);
      out << g17(r.value) << " " << g17(r.est_error) << "\n";
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      std::vector<std::string> ids = split_ids(verify_ids);
      if (verify_all) ids.push_back("all");
      if (ids.empty()) {
        err << "error: name claims to verify or pass --all\n";
        return kExitUsage;
      }
      SuiteOptions opts;
      opts.grid_n = grid_n.value_or(cfg.grid_n);
      opts.margin_floor = margin_floor.value_or(cfg.margin_floor);
      opts.threads = threads.value_or(cfg.threads);
      prepare_stieltjes(cfg.stieltjes_cache, false);
      const SuiteReport rep = run_suite(ids, opts);
      if (verbose) {
        for (const auto& r : rep.rows) {
          out << "  " << r.id << "  " << to_string(r.status) << "  margin=" << g6(r.min_margin)
              << " at x=" << g6(r.argmin_x) << (r.notes.empty() ? "" : "  " + r.notes) << "\n";
        }
      }
      int failed = 0;
      for (const auto& l : summarise(rep)) {
        if (l.status != Status::Pass) ++failed;
        char line[320];
        std::snprintf(line, sizeof line, "%-5s %-12s checks=%-2d min_margin=%-12s at x=%-12s worst=%s",
                      l.id.c_str(), to_string(l.status), l.checks, g6(l.worst_margin).c_str(),
                      g6(l.worst_x).c_str(), l.worst_check.c_str());
        out << line << "\n";
      }
      char summary[128];
      std::snprintf(summary, sizeof summary, "%zu claims, %d not passing, %.2f s\n",
                    rep.claims.size(), failed, rep.seconds);
      out << summary;
      if (!json_path.empty()) write_file(json_path, render(rep.rows, ReportFormat::Json));
      return rep.all_pass() ? kExitPass : kExitFail;
    }

    if (sturm_cmd->parsed()) {
      CoeffEnclosure e;
      int expected = 0;
      const auto named = parse_poly_id(poly_spec);
      if (const auto id = named) {
        e = build_named_poly(*id);
        switch (*id) {
          case PolyId::P: case PolyId::P1: case PolyId::V: expected = -1; break;
          case PolyId::Q: expected = 1; break;
          case PolyId::QUARTIC: break;
        }
      } else {
        e.poly = parse_poly(poly_spec);
        e.coeff_abs_err = 0;
      }
      if (!sign_text.empty()) expected = sign_text == "+" ? 1 : -1;
      const Rational a = parse_rational(a_text);
      const bool to_inf = b_text == "inf" || b_text == "+inf";
      Rational b = to_inf ? Rational(a + 1) : parse_rational(b_text);
      if (!(a < b)) throw DomainError("sturm: need a < b");
      const int probe = expected != 0 ? expected : [&] {
        const int s = sign(e.poly(Rational((a + b) / 2)));
        return s == 0 ? 1 : s;
      }();
      Certificate c;
      try {
        c = to_inf ? certify_sign_to_infinity(e, a, b, probe) : certify_sign(e, a, b, probe);
      } catch (const CertificationError& ex) {
        err << "certificate refuted: " << ex.what() << "\n";
        return kExitFail;
      }
      if (!named) c.poly_id = poly_spec;
      if (sturm_json) {
        out << canonical_dump(to_json(c)) << "\n";
      } else {
        out << "poly=" << c.poly_id << " interval=(" << c.a.get_str() << ", "
            << (to_inf ? std::string("inf") : c.b.get_str()) << ")\n"
            << "roots=" << c.root_count + c.tail_root_count << "\n"
            << "sign=" << (c.sign > 0 ? "+" : c.sign < 0 ? "-" : "0") << "\n"
            << "margin=" << g17(c.margin) << "\n"
            << "perturbation_bound=" << g17(c.perturbation_bound) << "\n"
            << "robust=" << (c.robust ? "yes" : "no") << "\n";
        if (c.perturbed) out << "endpoints perturbed to avoid a root\n";
        if (c.root_bound) out << "cauchy_bound=" << g17(*c.root_bound) << "\n";
      }
      if (expected != 0 && !(c.holds() && c.sign == expected)) return kExitFail;
      return kExitPass;
    }

    if (st_cmd->parsed()) {
      const std::optional<std::string> cache =
          cache_path.empty() ? cfg.stieltjes_cache : std::optional<std::string>(cache_path);
      const StieltjesTable* table = nullptr;
      StieltjesTable fresh;
      if (recompute && !cache) {
        fresh = compute_stieltjes_table();
        table = &fresh;
      } else {
        prepare_stieltjes(cache, recompute);
        table = &stieltjes_table();
      }
      if (st_n < 0 || static_cast<std::size_t>(st_n) > table->max_index()) {
        err << "error: index " << st_n << " outside 0.." << table->max_index() << "\n";
        return kExitUsage;
      }
      const double g = table->gamma[st_n];
      out << "n=" << st_n << " value=" << table->decimal[st_n] << " abs_error=" << g6(table->prec[st_n])
          << "\n";
      if (st_n == 0) {
        out << "parity_bound=n/a lavrik_bound=n/a\n";
        return kExitPass;
      }
      const double pb = stieltjes_bound(st_n), lb = lavrik_bound(st_n);
      const bool p_ok = std::abs(g) <= pb, l_ok = std::abs(g) <= lb;
      out << "parity_bound=" << g6(pb) << " " << (p_ok ? "PASS" : "FAIL") << "\n"
          << "lavrik_bound=" << g6(lb) << " " << (l_ok ? "PASS" : "FAIL") << "\n";
      return p_ok && l_ok ? kExitPass : kExitFail;
    }

    if (rep_cmd->parsed()) {
      const ReportFormat fmt = parse_report_format(format_text);
      std::vector<ClaimReport> rows;
      bool all_pass = true;
      if (!from_path.empty()) {
        std::ifstream in(from_path);
        if (!in) throw DomainError("cannot read " + from_path);
        nlohmann::json j;
        try {
          in >> j;
        } catch (const nlohmann::json::exception& ex) {
          throw DomainError(from_path + ": " + ex.what());
        }
        rows = reports_from_json(j);
        for (const auto& r : rows) all_pass = all_pass && r.passed();
      } else {
        std::vector<std::string> ids = claims_text ? split_ids({*claims_text}) : std::vector<std::string>{"all"};
        SuiteOptions opts;
        opts.grid_n = rep_grid_n.value_or(cfg.grid_n);
        opts.margin_floor = cfg.margin_floor;
        opts.threads = cfg.threads;
        prepare_stieltjes(cfg.stieltjes_cache, false);
        const SuiteReport rep = run_suite(ids, opts);
        rows = rep.rows;
        all_pass = rep.all_pass();
      }
      const std::string text = render(rows, fmt);
      if (out_path.empty()) out << text;
      else write_file(out_path, text);
      return all_pass ? kExitPass : kExitFail;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hmz
