#pragma once

#include <ostream>

namespace framecraft::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 bad input, 2 numeric failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace framecraft::cli
