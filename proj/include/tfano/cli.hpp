#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tfano {

// Exit status: 0 success, 2 validation failure or bad input, 1 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfano
