#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biharm::cli {

/// Runs the command-line front end in-process (args excludes the program
/// name).  Exit codes: 0 = success / no violation; 1 = bound violated or
/// hypothesis gate failed; 2 = input error; 3 = quadrature non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biharm::cli
