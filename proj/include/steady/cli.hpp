#pragma once

#include "steady/errors.hpp"

#include <iosfwd>

namespace steady {

/// Process exit status for a solver error.
int exit_code(ErrorKind kind);

/// Entry point of the steady-bvp command line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steady
