#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mbfix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitRefused = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbfix::cli
