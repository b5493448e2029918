#pragma once

#include <algorithm>
#include <cmath>

namespace elnet {

/// Solver-vs-closed-form agreement.
inline constexpr double kSolverTolerance = 1e-9;
/// Normalization of probability vectors.
inline constexpr double kProbabilityTolerance = 1e-12;
/// Grounded systems whose condition estimate exceeds this are flagged.
inline constexpr double kConditionWarning = 1e12;

/// |a - b| / max(1, |a|, |b|): absolute near zero, relative elsewhere.
inline double relative_error(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace elnet
