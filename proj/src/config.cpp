#include "hmz/config.hpp"

#include <charconv>
#include <fstream>

#include "hmz/errors.hpp"

namespace hmz {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(const std::string& v, int line) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw DomainError("config line " + std::to_string(line) + ": bad number '" + v + "'");
  }
  return out;
}

}  // namespace

Config parse_config(std::istream& in, Config cfg) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(line) + ": expected key=value");
    }
    const std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
    if (key == "grid_n") {
      cfg.grid_n = parse_number<int>(val, line);
      if (cfg.grid_n < 3) throw DomainError("config line " + std::to_string(line) + ": grid_n must be >= 3");
    } else if (key == "margin_floor") {
      cfg.margin_floor = parse_number<double>(val, line);
    } else if (key == "threads") {
      cfg.threads = parse_number<int>(val, line);
    } else if (key == "stieltjes_cache") {
      cfg.stieltjes_cache = val;
    } else {
      throw DomainError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read config file " + path);
  return parse_config(f, base);
}

}  // namespace hmz
