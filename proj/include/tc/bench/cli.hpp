// Command-line front end. Exit codes: 0 success, 1 tolerance failure
// (compare), 2 usage or input error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tc::bench {

// args excludes the program name. Subcommands: coeffs, sweep, qasm,
// sample, compare.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace tc::bench
