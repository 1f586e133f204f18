#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hecke {

// Exit codes: 0 success, 1 a check failed, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke
