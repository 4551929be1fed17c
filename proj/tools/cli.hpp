#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input or usage.

#include <iosfwd>
#include <string>
#include <vector>

namespace golay2d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace golay2d::cli
