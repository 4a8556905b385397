#pragma once

#include <iosfwd>

namespace hyperquad::cli {

/// Entry point of the command-line tool; parses argv, runs the requested
/// subcommand, and writes to the given streams. Returns the process exit
/// status: 0 when every verdict passed, 1 when a verification verdict failed,
/// 2 on usage or internal errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hyperquad::cli
