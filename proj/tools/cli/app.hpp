#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordmap::cli {

// Runs one command given argv-style arguments (program name excluded),
// writing results to `out` and diagnostics to `err`. Returns the process
// exit status: 0 = verified / feasible / no counterexample, 1 = refuted,
// 2 = usage or domain error, 3 = resource bound exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Same, on std::cout / std::cerr.
int run(const std::vector<std::string>& args);

}  // namespace ordmap::cli
