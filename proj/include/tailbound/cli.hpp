#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tailbound {

// Command-line front end.  args excludes the program name.  Exit codes:
// 0 success, 1 verification failure, 2 usage/input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tailbound
