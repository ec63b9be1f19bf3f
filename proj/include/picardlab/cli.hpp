#pragma once

#include <iosfwd>

namespace picardlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr long kDefaultChiCap = 10000;

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // certification, classification or IO failure
inline constexpr int kExitUsage = 2;

// Subcommands: verify-theorem, geography, classify, slopes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace picardlab
