#include "disclab/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "disclab/circle.hpp"
#include "disclab/error.hpp"
#include "disclab/summation.hpp"

namespace disclab {

void RadialScheme::validate() const {
  if (depth < 1) throw ParameterError("depth", "must be at least 1");
  if (depth > 1000) throw ParameterError("depth", "must be at most 1000");
  if (angular_m != 0 && (angular_m < 4 || !is_power_of_two(angular_m))) {
    throw ParameterError("angular_m", "must be 0 or a power of two >= 4");
  }
  if (refinement < 1 || refinement > 512) throw ParameterError("refinement", "must lie in [1,512]");
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto rule = std::make_unique<GaussRule>();
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      double xi = 0.0, wi = 0.0;
      gsl_integration_glfixed_point(0.0, 1.0, static_cast<size_t>(i), &xi, &wi, t);
      rule->x.push_back(xi);
      rule->w.push_back(wi);
    }
    gsl_integration_glfixed_table_free(t);
    slot = std::move(rule);
  }
  return *slot;
}

std::vector<RadialNode> ring_nodes(int depth, int per_ring) {
  const GaussRule& g = gauss_legendre(per_ring);
  std::vector<RadialNode> nodes;
  nodes.reserve(static_cast<std::size_t>(depth * per_ring));
  for (int k = 1; k <= depth; ++k) {
    const double outer = std::ldexp(1.0, -(k - 1));  // gap at the inner edge
    const double width = std::ldexp(1.0, -k);
    for (int i = 0; i < per_ring; ++i) {
      const double gap = outer - width * g.x[static_cast<std::size_t>(i)];
      nodes.push_back({1.0 - gap, gap, width * g.w[static_cast<std::size_t>(i)], k});
    }
  }
  return nodes;
}

std::vector<RadialNode> panel_nodes(double a, double b, int panels, int order) {
  const GaussRule& g = gauss_legendre(order);
  std::vector<RadialNode> nodes;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    for (int i = 0; i < order; ++i) {
      const double r = a + h * (p + g.x[static_cast<std::size_t>(i)]);
      nodes.push_back({r, 1.0 - r, h * g.w[static_cast<std::size_t>(i)], 0});
    }
  }
  return nodes;
}

double simpson(const std::function<double(double)>& fn, double a, double b, int n) {
  if (n < 2 || n % 2 != 0) throw ParameterError("n", "Simpson needs an even panel count");
  const double h = (b - a) / n;
  CompensatedSum s;
  s += fn(a);
  s += fn(b);
  for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * fn(a + h * i);
  return s.value() * h / 3.0;
}

LogScaleIntegral integrate_log_scale(const std::function<double(double)>& density, double u0,
                                     const LogScaleOptions& opt,
                                     const std::function<double(double)>& closed_tail) {
  if (!(u0 >= 1.0)) throw ParameterError("u0", "u = log(e/(1-r)) is at least 1");
  const double ln2 = std::numbers::ln2;
  const double u_end = 1.0 + opt.depth * ln2;
  LogScaleIntegral out;
  double u_last = u0;
  CompensatedSum body;
  if (u0 < u_end) {
    // integrate level by level so each level keeps the requested resolution
    const double first = std::floor((u0 - 1.0) / ln2);
    for (int level = static_cast<int>(first); level < opt.depth; ++level) {
      const double a = std::max(u0, 1.0 + level * ln2);
      const double b = 1.0 + (level + 1) * ln2;
      if (b <= a) continue;
      int n = static_cast<int>(std::ceil(opt.nodes_per_level * (b - a) / ln2));
      n += n % 2;
      n = std::max(n, 2);
      body += simpson(density, a, b, n);
    }
    u_last = u_end;
  }
  out.value = body.value();

  if (closed_tail) {
    out.tail = closed_tail(u_last);
    out.divergent = !std::isfinite(out.tail);
    out.value += out.tail;
    return out;
  }

  // continuation in v = log u: du = u dv
  auto in_v = [&](double v) {
    const double u = std::exp(v);
    return density(u) * u;
  };
  const double v0 = std::log(u_last);
  const double span = opt.v_span;
  const double per_unit = opt.v_nodes / span;
  int n_main = static_cast<int>(std::ceil(per_unit * (span - 1.0)));
  n_main += n_main % 2;
  int n_last = static_cast<int>(std::ceil(per_unit));
  n_last += n_last % 2;
  const double main_part = simpson(in_v, v0, v0 + span - 1.0, std::max(n_main, 2));
  const double last_unit = simpson(in_v, v0 + span - 1.0, v0 + span, std::max(n_last, 2));
  out.tail = main_part + last_unit;
  out.value += out.tail;
  out.divergent = !std::isfinite(out.value) || std::abs(last_unit) > opt.cauchy_tol * std::abs(out.value);
  return out;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw ParameterError("window", "a line fit needs at least 2 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit{};
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(y[i] - fit.slope * x[i] - fit.intercept));
  }
  return fit;
}

}  // namespace disclab
