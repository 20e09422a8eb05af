#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logkit {

// Exit codes: 0 success, 1 analysis-negative under --strict (and oracle
// disagreements in `search`), 2 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logkit
