#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k4::cli {

// Exit codes: 0 success, 1 verification/internal-check failure, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

// Full command-line front end. The vector form exists so tests can drive the
// real surface in-process; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace k4::cli
