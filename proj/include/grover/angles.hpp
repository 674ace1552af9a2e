#pragma once

#include <numbers>
#include <string_view>

namespace grover {

inline constexpr double k_pi = std::numbers::pi;

/// Reduce an angle to (-pi, pi]. Throws std::invalid_argument on non-finite input.
double canonicalize_angle(double radians);

/// Parse an angle string: a decimal literal ("1.57", "2e-1"), optionally with a
/// "pi" suffix meaning multiplication by pi ("0.5pi", "-0.268pi", "pi", "-pi").
/// Throws std::invalid_argument on anything else. The result is not canonicalized.
double parse_angle(std::string_view text);

}  // namespace grover
