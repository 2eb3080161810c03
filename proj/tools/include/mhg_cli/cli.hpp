#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mhg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one invocation. args excludes the program name. Reports go to out,
/// diagnostics to err. Returns 0 (ok), 1 (verification failed) or 2 (invalid input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhg::cli
