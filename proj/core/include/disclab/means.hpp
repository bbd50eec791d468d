#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "disclab/power_series.hpp"
#include "disclab/quadrature.hpp"

namespace disclab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// M_p(r, f) by the rectangle rule on m angles (auto-doubled to the alias-free
/// size). p = kInfinity gives the sample maximum.
double integral_mean(const PowerSeries& f, double p, double r, std::size_t m = 0);

/// M_p from precomputed circle samples.
double mean_of_samples(const std::vector<cplx>& values, double p);

struct SupMean {
  double value;
  double theta;
  /// Spacing of the sample grid the search started from.
  double grid_step;
};

/// M_inf(r, f): sample maximum refined by golden-section search on the
/// neighbouring grid cells (Horner evaluation).
SupMean sup_mean(const PowerSeries& f, double r, std::size_t m = 0);

struct HardyNorm {
  std::vector<double> radii;
  std::vector<double> means;  // M_p(r_k, f)
  /// M_p(1, f); the truncation is a polynomial so the limit is attained.
  double value;
  /// sqrt(sum |a_k|^2) when p = 2, otherwise NaN.
  double parseval;
};

/// Throws NumericalError if M_p(r_k, f) decreases by more than 1e-9
/// (relative), which means the angular grid is under-resolved.
HardyNorm hardy_norm(const PowerSeries& f, double p, const RadialScheme& scheme = {});

struct DirichletNorm {
  /// p-th root of |f(0)|^p + the quadrature of the area integral.
  double value;
  /// |f(0)|^p + area integral (the p-th power of value).
  double pth_power;
  /// Integral over 1 - 2^-depth < r < 1 is at most this (M_p monotone).
  double remainder_bound;
  /// Area integral through ring k, k = 1..depth.
  std::vector<double> partial;
  bool divergent;
};

/// |f(0)|^p + 2 int_0^1 r M_p(r, f')^p (1-r^2)^alpha dr with Gauss-Legendre
/// rings. divergent is set when the last ring adds more than cauchy_tol of
/// the total.
DirichletNorm dirichlet_norm(const PowerSeries& f, double p, double alpha,
                             const RadialScheme& scheme = {}, double cauchy_tol = 1e-3);

/// Exact p = 2 value: sqrt(|a_0|^2 + sum n^2 |a_n|^2 B(n, alpha+1)).
double dirichlet_norm2_exact(const PowerSeries& f, double alpha);

/// sup over r in {0} u {r_k} of M_inf(r, f')(1-r^2), plus |f(0)|.
double bloch_norm(const PowerSeries& f, const RadialScheme& scheme = {});

/// Log-log growth fit y = slope * x + intercept over levels [first, last].
struct GrowthFit {
  int first_level;
  int last_level;
  double slope;
  double intercept;
  double max_residual;
};

/// Fits log(values[k]) against log(log(e/(1-r_k))) = log(1 + k log 2) over
/// the window. levels[i] is the level of values[i]. Throws ParameterError if
/// the window holds fewer than 3 points.
GrowthFit fit_growth(const std::vector<int>& levels, const std::vector<double>& values,
                     int first, int last);

}  // namespace disclab
