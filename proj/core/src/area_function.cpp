#include "disclab/area_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "disclab/circle.hpp"
#include "disclab/error.hpp"
#include "disclab/means.hpp"
#include "disclab/parallel.hpp"
#include "disclab/summation.hpp"

namespace disclab {
namespace {

constexpr double kPi = std::numbers::pi;

double inner_radius(double sigma) { return (sigma - 1.0) / (sigma + 1.0); }

// From |1 - r e^{i phi}|^2 < sigma^2 (1-r)^2: 1 - cos phi < (sigma^2-1) t^2/(2r).
double half_width_gap(double sigma, double r, double gap) {
  if (r <= inner_radius(sigma)) return kPi;
  const double s = gap * std::sqrt((sigma * sigma - 1.0) / (4.0 * r));
  return s >= 1.0 ? kPi : 2.0 * std::asin(s);
}

// Nodes beyond the full-circle disc r <= r*: a t^2 map for the square-root
// edge at r*, then dyadic rings in the gap down to the vertex cutoff.
std::vector<RadialNode> stolz_nodes(const StolzParams& stolz, const RadialScheme& scheme) {
  const double r0 = inner_radius(stolz.sigma);
  const double g0 = (1.0 - r0) / 2.0;
  std::vector<RadialNode> nodes;
  const double smax = std::sqrt(g0);
  for (const RadialNode& s : panel_nodes(0.0, smax, 4, 16)) {
    const double r = r0 + s.r * s.r;
    nodes.push_back({r, (1.0 - r0) - s.r * s.r, s.weight * 2.0 * s.r, 0});
  }
  const GaussRule& g = gauss_legendre(scheme.refinement);
  double outer = g0;
  int ring = 1;
  while (outer > stolz.vertex_cutoff) {
    const double inner = std::max(outer / 2.0, stolz.vertex_cutoff);
    const double width = outer - inner;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double gap = outer - width * g.x[i];
      nodes.push_back({1.0 - gap, gap, width * g.w[i], ring});
    }
    outer = inner;
    ++ring;
  }
  return nodes;
}

// int_{|z| < r} |f'|^2 dA = sum n |a_n|^2 r^{2n}.
double inner_energy(const PowerSeries& f, double r) {
  CompensatedSum s;
  const auto& a = f.coeffs();
  for (std::size_t n = 1; n < a.size(); ++n) {
    s += static_cast<double>(n) * std::norm(a[n]) * std::pow(r, 2.0 * static_cast<double>(n));
  }
  return s.value();
}

// Fourier coefficients (divided by m) of |f'(r e^{it})|^2, length m.
std::vector<cplx> energy_spectrum(const PowerSeries& fp, double r, std::size_t m) {
  auto v = evaluate_on_circle(fp, r, m);
  for (auto& x : v) x = std::norm(x);
  fft_inplace(v, -1);
  const double inv = 1.0 / static_cast<double>(m);
  for (auto& x : v) x *= inv;
  v[m / 2] = 0.0;
  return v;
}

double signed_freq(std::size_t n, std::size_t m) {
  return n < m / 2 ? static_cast<double>(n) : static_cast<double>(n) - static_cast<double>(m);
}

// int_{-w}^{w} e^{i n phi} d phi
double arc_kernel(double freq, double w) {
  return freq == 0.0 ? 2.0 * w : 2.0 * std::sin(freq * w) / freq;
}

}  // namespace

void StolzParams::validate() const {
  if (!(sigma > 1.0)) throw ParameterError("sigma", "aperture must exceed 1");
  if (!(vertex_cutoff > 0.0 && vertex_cutoff < 1.0)) {
    throw ParameterError("vertex_cutoff", "must lie in (0,1)");
  }
}

double stolz_half_width(double sigma, double r) { return half_width_gap(sigma, r, 1.0 - r); }

double stolz_area(const StolzParams& stolz, const RadialScheme& scheme) {
  stolz.validate();
  scheme.validate();
  const double r0 = inner_radius(stolz.sigma);
  CompensatedSum s;
  s += r0 * r0;
  for (const RadialNode& nd : stolz_nodes(stolz, scheme)) {
    s += nd.weight * nd.r / kPi * 2.0 * half_width_gap(stolz.sigma, nd.r, nd.gap);
  }
  return s.value();
}

double square_function(const PowerSeries& f, cplx zeta, const StolzParams& stolz,
                       const RadialScheme& scheme) {
  stolz.validate();
  scheme.validate();
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) throw ParameterError("zeta", "must have modulus 1");
  const PowerSeries fp = derivative(f);
  if (fp.is_constant() && fp[0] == cplx{}) return 0.0;
  const double theta0 = std::arg(zeta);
  const std::size_t m = alias_free_samples(fp.degree());
  const auto nodes = stolz_nodes(stolz, scheme);
  const auto terms = parallel_map<double>(nodes.size(), [&](std::size_t i) {
    const RadialNode& nd = nodes[i];
    const double w = half_width_gap(stolz.sigma, nd.r, nd.gap);
    const auto c = energy_spectrum(fp, nd.r, m);
    CompensatedSum s;
    for (std::size_t n = 0; n < m; ++n) {
      const double fr = signed_freq(n, m);
      s += (c[n] * std::polar(arc_kernel(fr, w), fr * theta0)).real();
    }
    return nd.weight * nd.r / kPi * s.value();
  });
  CompensatedSum total;
  total += inner_energy(f, inner_radius(stolz.sigma));
  for (double t : terms) total += t;
  return std::sqrt(std::max(0.0, total.value()));
}

std::vector<double> square_function_grid(const PowerSeries& f, std::size_t M,
                                         const StolzParams& stolz, const RadialScheme& scheme) {
  stolz.validate();
  scheme.validate();
  if (!is_power_of_two(M)) throw ParameterError("m", "boundary grid must be a power of two");
  const PowerSeries fp = derivative(f);
  if (fp.is_constant() && fp[0] == cplx{}) return std::vector<double>(M, 0.0);
  const std::size_t m = std::max(alias_free_samples(fp.degree()), M);
  const std::size_t stride = m / M;
  const auto nodes = stolz_nodes(stolz, scheme);
  std::vector<CompensatedSum> acc(M);
  parallel_ordered<std::vector<double>>(
      nodes.size(),
      [&](std::size_t i) {
        const RadialNode& nd = nodes[i];
        const double w = half_width_gap(stolz.sigma, nd.r, nd.gap);
        auto c = energy_spectrum(fp, nd.r, m);
        for (std::size_t n = 0; n < m; ++n) c[n] *= arc_kernel(signed_freq(n, m), w);
        fft_inplace(c, +1);
        std::vector<double> vals(M);
        const double scale = nd.weight * nd.r / kPi;
        for (std::size_t j = 0; j < M; ++j) vals[j] = scale * c[j * stride].real();
        return vals;
      },
      [&](std::size_t, std::vector<double> vals) {
        for (std::size_t j = 0; j < M; ++j) acc[j] += vals[j];
      });
  const double inner = inner_energy(f, inner_radius(stolz.sigma));
  std::vector<double> out(M);
  for (std::size_t j = 0; j < M; ++j) out[j] = std::sqrt(std::max(0.0, acc[j].value() + inner));
  return out;
}

FeffermanStein fefferman_stein(const PowerSeries& f, double p, const StolzParams& stolz,
                               const RadialScheme& scheme, std::size_t m) {
  if (!(p > 0.0)) throw ParameterError("p", "must be positive");
  FeffermanStein out{};
  out.lhs = std::pow(hardy_norm(f, p, scheme).value, p);
  const auto s = square_function_grid(f, m, stolz, scheme);
  CompensatedSum sum;
  for (double v : s) sum += std::pow(v, p);
  out.rhs = sum.value() / static_cast<double>(m) + std::pow(std::abs(f[0]), p);
  out.ratio = out.lhs / out.rhs;
  return out;
}

}  // namespace disclab
