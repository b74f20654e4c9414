#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graceful::cli {

// Runs one invocation with explicit streams; args excludes the program name.
// Exit code: 0 success, 1 verification found violations, 2 usage or error.
int run_streams(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// argv wrapper used by the binary entry point.
int run(int argc, const char* const* argv);

}  // namespace graceful::cli
