#pragma once

#include <ostream>

namespace dualpricer {

/// Runs the command line. Exit codes: 0 success, 1 numerical or domain
/// failure (one-line diagnostic on `err`), 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dualpricer
