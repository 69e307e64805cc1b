#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmz {

/// Exit codes: 0 all checks pass, 1 some claim fails, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmz
