#pragma once

#include <iosfwd>

namespace circpot::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kSelftestFailed = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kNoConvergence = 3;
inline constexpr int kUsage = 64;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circpot::cli
