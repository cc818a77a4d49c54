#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipramsey::cli {

// Exit statuses.
inline constexpr int kOk = 0;             // arrows / witness found / report
inline constexpr int kError = 1;          // domain or parse error
inline constexpr int kUsage = 2;
inline constexpr int kNegative = 3;       // not-arrows / no witness
inline constexpr int kIndeterminate = 4;  // search budget exhausted

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bipramsey::cli
