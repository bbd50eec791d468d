#include "disclab/means.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "disclab/circle.hpp"
#include "disclab/error.hpp"
#include "disclab/parallel.hpp"
#include "disclab/summation.hpp"

namespace disclab {
namespace {

std::size_t resolve_samples(std::size_t requested, std::size_t degree) {
  if (requested != 0 && !is_power_of_two(requested)) {
    throw ParameterError("m", "angular sample count must be a power of two");
  }
  std::size_t m = std::max<std::size_t>(requested, 4);
  const std::size_t need = 2 * (degree + 1);
  while (m < need) m *= 2;
  return m;
}

double radius_of_level(int k) { return 1.0 - std::ldexp(1.0, -k); }

}  // namespace

double mean_of_samples(const std::vector<cplx>& values, double p) {
  if (!(p > 0.0)) throw ParameterError("p", "must be positive");
  if (std::isinf(p)) {
    double mx = 0.0;
    for (const cplx& v : values) mx = std::max(mx, std::abs(v));
    return mx;
  }
  CompensatedSum s;
  if (p == 2.0) {
    for (const cplx& v : values) s += std::norm(v);
    return std::sqrt(s.value() / static_cast<double>(values.size()));
  }
  for (const cplx& v : values) s += std::pow(std::abs(v), p);
  return std::pow(s.value() / static_cast<double>(values.size()), 1.0 / p);
}

double integral_mean(const PowerSeries& f, double p, double r, std::size_t m) {
  if (!(p > 0.0)) throw ParameterError("p", "must be positive");
  if (f.is_constant()) return std::abs(f[0]);
  return mean_of_samples(evaluate_on_circle(f, r, resolve_samples(m, f.degree())), p);
}

SupMean sup_mean(const PowerSeries& f, double r, std::size_t m) {
  const std::size_t n = resolve_samples(m, f.degree());
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  if (f.is_constant()) return {std::abs(f[0]), 0.0, step};
  const auto v = evaluate_on_circle(f, r, n);
  std::size_t best = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (std::abs(v[j]) > std::abs(v[best])) best = j;
  }
  auto mod = [&](double t) { return std::abs(f(std::polar(r, t))); };
  // golden-section search over the two neighbouring cells
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = step * static_cast<double>(best) - step;
  double b = a + 2.0 * step;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = mod(c), fd = mod(d);
  for (int it = 0; it < 80; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = mod(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = mod(d);
    }
  }
  const double t = 0.5 * (a + b);
  const double refined = mod(t);
  if (refined > std::abs(v[best])) return {refined, t, step};
  return {std::abs(v[best]), step * static_cast<double>(best), step};
}

HardyNorm hardy_norm(const PowerSeries& f, double p, const RadialScheme& scheme) {
  scheme.validate();
  if (!(p > 0.0)) throw ParameterError("p", "must be positive");
  const std::size_t m = resolve_samples(scheme.angular_m, f.degree());
  HardyNorm out;
  for (int k = 1; k <= scheme.depth; ++k) out.radii.push_back(radius_of_level(k));
  out.means = parallel_map<double>(out.radii.size(), [&](std::size_t i) {
    return integral_mean(f, p, out.radii[i], m);
  });
  out.value = integral_mean(f, p, 1.0, m);
  double prev = std::abs(f[0]);
  for (std::size_t i = 0; i <= out.means.size(); ++i) {
    const double cur = i < out.means.size() ? out.means[i] : out.value;
    if (cur < prev * (1.0 - 1e-9) - 1e-300) {
      throw NumericalError("M_p(r, f) decreased between radii; angular grid under-resolved");
    }
    prev = cur;
  }
  out.parseval = std::numeric_limits<double>::quiet_NaN();
  if (p == 2.0) {
    CompensatedSum s;
    for (const cplx& c : f.coeffs()) s += std::norm(c);
    out.parseval = std::sqrt(s.value());
  }
  return out;
}

DirichletNorm dirichlet_norm(const PowerSeries& f, double p, double alpha,
                             const RadialScheme& scheme, double cauchy_tol) {
  scheme.validate();
  if (!(p > 0.0)) throw ParameterError("p", "must be positive");
  if (!(alpha > -1.0)) throw ParameterError("alpha", "must exceed -1");
  const PowerSeries fp = derivative(f);
  const std::size_t m = resolve_samples(scheme.angular_m, fp.degree());
  const auto nodes = ring_nodes(scheme.depth, scheme.refinement);
  const bool flat = fp.is_constant();
  const auto terms = parallel_map<double>(nodes.size(), [&](std::size_t i) {
    const RadialNode& nd = nodes[i];
    const double mp = flat ? std::abs(fp[0]) : integral_mean(fp, p, nd.r, m);
    const double one_minus_r2 = nd.gap * (2.0 - nd.gap);
    return nd.weight * 2.0 * nd.r * std::pow(mp, p) * std::pow(one_minus_r2, alpha);
  });

  DirichletNorm out;
  CompensatedSum total;
  double last_ring = 0.0;
  int ring = 1;
  CompensatedSum ring_sum;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ring_sum += terms[i];
    total += terms[i];
    if (i + 1 == nodes.size() || nodes[i + 1].ring != ring) {
      out.partial.push_back(total.value());
      last_ring = ring_sum.value();
      ring_sum = CompensatedSum{};
      ++ring;
    }
  }
  const double area = total.value();
  const double f0 = std::pow(std::abs(f[0]), p);
  out.pth_power = f0 + area;
  out.value = std::pow(out.pth_power, 1.0 / p);
  const double g = std::ldexp(1.0, -scheme.depth);
  const double m1 = flat ? std::abs(fp[0]) : integral_mean(fp, p, 1.0, m);
  out.remainder_bound = std::pow(m1, p) * std::pow(g * (2.0 - g), alpha + 1.0) / (alpha + 1.0);
  out.divergent = area > 0.0 && last_ring > cauchy_tol * area;
  return out;
}

double dirichlet_norm2_exact(const PowerSeries& f, double alpha) {
  if (!(alpha > -1.0)) throw ParameterError("alpha", "must exceed -1");
  const auto& a = f.coeffs();
  CompensatedSum s;
  s += std::norm(a[0]);
  const double lg_a1 = gsl_sf_lngamma(alpha + 1.0);
  for (std::size_t n = 1; n < a.size(); ++n) {
    if (a[n] == cplx{}) continue;
    const double nd = static_cast<double>(n);
    const double beta = std::exp(gsl_sf_lngamma(nd) + lg_a1 - gsl_sf_lngamma(nd + alpha + 1.0));
    s += nd * nd * std::norm(a[n]) * beta;
  }
  return std::sqrt(s.value());
}

double bloch_norm(const PowerSeries& f, const RadialScheme& scheme) {
  scheme.validate();
  const PowerSeries fp = derivative(f);
  const auto candidates = parallel_map<double>(static_cast<std::size_t>(scheme.depth) + 1,
                                               [&](std::size_t k) {
    if (k == 0) return std::abs(fp[0]);
    const double gap = std::ldexp(1.0, -static_cast<int>(k));
    return sup_mean(fp, 1.0 - gap, scheme.angular_m).value * gap * (2.0 - gap);
  });
  return *std::max_element(candidates.begin(), candidates.end()) + std::abs(f[0]);
}

GrowthFit fit_growth(const std::vector<int>& levels, const std::vector<double>& values, int first,
                     int last) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < first || levels[i] > last) continue;
    x.push_back(std::log1p(levels[i] * std::numbers::ln2));
    y.push_back(std::log(values[i]));
  }
  if (x.size() < 3) throw ParameterError("window", "growth fit needs at least 3 levels");
  const LineFit fit = fit_line(x, y);
  return {first, last, fit.slope, fit.intercept, fit.max_residual};
}

}  // namespace disclab
