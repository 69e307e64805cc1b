#pragma once

// Optional key=value settings file for the command-line tool. Blank lines and
// lines starting with '#' are ignored; command-line flags take precedence.

#include <istream>
#include <optional>
#include <string>

namespace hmz {

struct Config {
  int grid_n = 2000;
  double margin_floor = 1e-9;
  int threads = 1;
  std::optional<std::string> stieltjes_cache;
};

/// Throws DomainError naming the line for unknown keys or malformed values.
Config parse_config(std::istream& in, Config base = {});
Config load_config(const std::string& path, Config base = {});

}  // namespace hmz
