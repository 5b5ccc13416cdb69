#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stirsys {

// Dispatches a full command line (without the program name).  Exit code 0
// on success / true verdicts, 1 on false verdicts, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirsys
