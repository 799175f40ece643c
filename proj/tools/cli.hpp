#pragma once

#include <ostream>

namespace cellmap::cli {

// Dispatches one subcommand. Exit codes: 0 success or verification pass,
// 1 verification failure, 2 input or usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cellmap::cli
