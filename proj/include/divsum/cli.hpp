#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divsum {

// Command-line front end: compute, compute3, verify, bench.
// Returns the process exit status: 0 success, 1 verify mismatch,
// 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace divsum
