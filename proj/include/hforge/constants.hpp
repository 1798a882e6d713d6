#pragma once

namespace hforge {

// Centralized float-backend tolerances (also quoted in the CLI help).
inline constexpr double kFloatTol = 1e-9;       // verification, unimodularity, dedup
inline constexpr double kClusterGap = 1e-8;      // minor-value clustering gap factor
inline constexpr double kCrossCompareTol = 1e-8; // exact-vs-float invariant comparison

} // namespace hforge
