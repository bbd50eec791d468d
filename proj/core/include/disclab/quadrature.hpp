#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace disclab {

/// Radii r_k = 1 - 2^-k, k = 1..depth; angular_m = 0 picks the alias-free
/// size automatically; refinement = Gauss-Legendre nodes per dyadic ring.
struct RadialScheme {
  int depth = 24;
  std::size_t angular_m = 0;
  int refinement = 8;

  void validate() const;
};

/// A quadrature node on [0,1). gap = 1 - r is carried separately so that
/// nodes next to the boundary keep full relative precision.
struct RadialNode {
  double r;
  double gap;
  double weight;
  int ring;  // ring k covers gap in [2^-k, 2^-(k-1)]
};

/// Gauss-Legendre nodes and weights mapped to [0,1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussRule& gauss_legendre(int n);

/// Gauss-Legendre nodes on each dyadic ring k = 1..depth, in increasing r.
std::vector<RadialNode> ring_nodes(int depth, int per_ring);

/// Gauss-Legendre nodes over [a, b] split into `panels` equal panels.
std::vector<RadialNode> panel_nodes(double a, double b, int panels, int order);

/// Result of integrating over u = log(e/(1-r)) from u0 to infinity.
struct LogScaleIntegral {
  double value = 0.0;
  /// Estimate of the part beyond the last node (closed form when supplied).
  double tail = 0.0;
  bool divergent = false;
};

/// Options for integrate_log_scale. One level is du = log 2, i.e. a halving
/// of 1 - r.
struct LogScaleOptions {
  int depth = 60;
  int nodes_per_level = 1 << 12;
  /// Extent of the v = log u continuation past the last level.
  double v_span = 40.0;
  int v_nodes = 1 << 12;
  /// The integral is flagged divergent when the last unit of v still
  /// contributes more than this fraction of the total.
  double cauchy_tol = 1e-6;
};

/// Integral of density(u) du over [u0, infinity): composite Simpson on a
/// uniform u-grid through `depth` levels, then a Simpson continuation in
/// v = log u. If closed_tail is set it replaces the continuation with the
/// exact integral from the last u-node to infinity.
LogScaleIntegral integrate_log_scale(const std::function<double(double)>& density, double u0,
                                     const LogScaleOptions& opt = {},
                                     const std::function<double(double)>& closed_tail = {});

/// Composite Simpson on a uniform grid of n (even) panels.
double simpson(const std::function<double(double)>& fn, double a, double b, int n);

/// Least-squares line through (x_i, y_i).
struct LineFit {
  double slope;
  double intercept;
  double max_residual;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace disclab
