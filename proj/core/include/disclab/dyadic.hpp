#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace disclab {

/// Dyadic arc at level k: normalized length 2^-k, position j in [0, 2^k).
/// The grid is turned by -1/4 so that level 1, j = 0 is the right half
/// circle. Arc j covers turn fractions (j 2^-k - 1/4, (j+1) 2^-k - 1/4];
/// the single wrap point (angle -pi/2) belongs to j = 0.
struct DyadicInterval {
  int level;
  std::uint64_t position;

  double length() const noexcept { return std::ldexp(1.0, -level); }
  /// Start of the arc in turns, in [-1/4, 3/4).
  double start_turn() const noexcept {
    return static_cast<double>(position) * length() - 0.25;
  }
};

/// Fraction of a turn in [0, 1) measured from angle -pi/2.
inline double grid_turn(double theta) noexcept {
  double t = theta / (2.0 * std::numbers::pi) + 0.25;
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

/// Position at `level` of the dyadic arc that contains angle theta.
inline std::uint64_t dyadic_position(double theta, int level) noexcept {
  const double scaled = std::ldexp(grid_turn(theta), level);
  if (scaled <= 0.0) return 0;
  const double c = std::ceil(scaled);
  return static_cast<std::uint64_t>(c) - 1;
}

}  // namespace disclab
