#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powham::cli {

/// Exit codes: 0 answered, 1 usage or input error, 2 budget exhausted or
/// value not determined.
inline constexpr int kExitAnswered = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUndetermined = 2;

/// Runs one command. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv);

}  // namespace powham::cli
