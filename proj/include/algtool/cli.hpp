#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algtool {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algtool
