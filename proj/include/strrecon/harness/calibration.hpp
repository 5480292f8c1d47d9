#pragma once

#include <cstdint>

// Harness constants fitted to runs over the generator grids. They are
// calibration values for this implementation, not published figures; bump
// the version whenever one changes.
namespace strrecon::harness::calibration {

inline constexpr const char* kVersion = "calibration-v1";

// Unknown n: C1 * sigma|p| + C2 * lg n + C3 * sigma.
inline constexpr double kUnknownSigmaP = 12;
inline constexpr double kUnknownLgN = 8;
inline constexpr double kUnknownSigma = 12;
// Largest allowed increase of the unknown-n query count when n doubles at a
// fixed period.
inline constexpr std::uint64_t kUnknownGrowthPerDoubling = 8;

// Corrupted: C * (d sigma|p| + d|p| lg(n/(d+1)) + sigma|p|).
inline constexpr double kCorrupted = 16;
// Intercalated: 2 sigma n + slack.
inline constexpr double kIntercalatedSlack = 64;

// Random-index median: C1 * n ln n + C2 * sigma.
inline constexpr double kRjiNLnN = 12;
inline constexpr double kRjiSigma = 4;

}  // namespace strrecon::harness::calibration
