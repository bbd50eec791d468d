#pragma once

#include <cstddef>
#include <vector>

#include "disclab/power_series.hpp"
#include "disclab/quadrature.hpp"

namespace disclab {

/// Stolz angle {z : |1 - conj(zeta) z| < sigma (1-|z|)}, cut at |z| <= 1 - eps_v.
struct StolzParams {
  double sigma = 2.0;
  double vertex_cutoff = 1e-6;

  void validate() const;
};

/// Angular half-width of the region at radius r (pi for r <= (sigma-1)/(sigma+1)).
double stolz_half_width(double sigma, double r);

/// Normalized area of the truncated region.
double stolz_area(const StolzParams& stolz, const RadialScheme& scheme = {});

/// S_f(zeta) = (int_Gamma |f'|^2 dA)^{1/2}, dA normalized.
double square_function(const PowerSeries& f, cplx zeta, const StolzParams& stolz = {},
                       const RadialScheme& scheme = {});

/// S_f at the m boundary points e^{2 pi i j/m} (m a power of two).
std::vector<double> square_function_grid(const PowerSeries& f, std::size_t m,
                                         const StolzParams& stolz = {},
                                         const RadialScheme& scheme = {});

struct FeffermanStein {
  double lhs;  // ||f||_{H^p}^p
  double rhs;  // int_T S_f^p dm + |f(0)|^p, dm normalized
  double ratio;
};

FeffermanStein fefferman_stein(const PowerSeries& f, double p, const StolzParams& stolz = {},
                               const RadialScheme& scheme = {}, std::size_t m = 256);

}  // namespace disclab
