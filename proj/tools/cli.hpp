#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parenbraid::cli {

// Exit codes: 0 success, 1 partial action, 2 malformed input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parenbraid::cli
