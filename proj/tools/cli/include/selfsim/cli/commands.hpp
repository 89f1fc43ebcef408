#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selfsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefused = 1;
inline constexpr int kExitInput = 2;

// Runs one command line (argv[0] is the program name). Reports go to out,
// diagnostics to err. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selfsim::cli
