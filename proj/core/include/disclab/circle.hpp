#pragma once

#include <cstddef>
#include <vector>

#include "disclab/power_series.hpp"

namespace disclab {

bool is_power_of_two(std::size_t m) noexcept;
std::size_t next_power_of_two(std::size_t m) noexcept;

/// Smallest power of two m >= 2(degree+1).
std::size_t alias_free_samples(std::size_t degree) noexcept;

/// f(r e^{2 pi i j/m}), j = 0..m-1. Throws AliasingError unless m is a power
/// of two with m >= 2(degree+1).
std::vector<cplx> evaluate_on_circle(const PowerSeries& f, double r, std::size_t m);

/// In-place DFT of length m (power of two). sign = -1 forward, +1 backward,
/// unnormalized.
void fft_inplace(std::vector<cplx>& data, int sign);

}  // namespace disclab
