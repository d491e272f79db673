#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loopbv::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;   ///< a verification did not hold
inline constexpr int kExitInput = 2;    ///< bad flags, bad input files
inline constexpr int kExitInternal = 3; ///< an internal consistency check tripped

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace loopbv::cli
