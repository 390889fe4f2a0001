#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpembed {

// Runs one CLI request.  Exit codes: 0 success (including "embeds": false),
// 2 usage or parse errors, 3 internal verification failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpembed
