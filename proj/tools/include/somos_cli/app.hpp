#pragma once

#include <iosfwd>

namespace somos::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kDomain = 3 };

/// Whole command-line front end; `argv[0]` is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace somos::cli
