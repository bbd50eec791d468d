#pragma once

#include <cstddef>
#include <vector>

#include "disclab/power_series.hpp"
#include "disclab/quadrature.hpp"

namespace disclab {

/// mu_g(S) = int_S |g'|^2 (1-|z|^2) dA over Carleson boxes. Angular
/// integrals are exact (Fourier primitive of |g'|^2 on each radius).
///
/// Level k holds 2^{k+1} arcs of turn length 2^-k starting at turn
/// i 2^-(k+1) (unrotated, from angle 0), radial part r >= 1 - 2^-k. Level 0
/// is the whole disc.
class MuGBoxTable {
 public:
  MuGBoxTable(const PowerSeries& g, const RadialScheme& scheme, int max_level);

  int max_level() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<double>& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }

  /// Box over the arc of length 2^-k centred at turn i 2^-(k+1).
  double centred(int k, std::size_t i) const;
  /// Box over the rotated dyadic arc (k, j) of dyadic.hpp.
  double dyadic(int k, std::size_t j) const;

 private:
  std::vector<std::vector<double>> levels_;
};

/// Default box depth for a series: deep enough that smaller boxes cannot
/// matter at the truncation degree, never deeper than scheme.depth.
int default_box_levels(const PowerSeries& g, const RadialScheme& scheme);

struct BmoaNorm {
  /// sup_a mu_g(S(a))/(1-|a|) + |g(0)|^2 (squared norm).
  double value;
  int level;
  std::size_t position;
  /// Max ratio per level.
  std::vector<double> profile;
};

/// Centres a = (1-2^-k) e^{2 pi i j / 2^{k+1}}, k = 0..max_level
/// (max_level < 0 selects default_box_levels). Ties go to the smallest k,
/// then the smallest j.
BmoaNorm bmoa_box_norm(const PowerSeries& g, const RadialScheme& scheme = {}, int max_level = -1);

}  // namespace disclab
