#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanolab {

// Runs one command line (without the program name).  Returns 0 on success,
// 1 on domain errors and failed expectations, 2 on usage and parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanolab
