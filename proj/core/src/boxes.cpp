#include "disclab/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "disclab/circle.hpp"
#include "disclab/error.hpp"
#include "disclab/parallel.hpp"

namespace disclab {
namespace {

int log2_exact(std::size_t m) {
  int k = 0;
  while ((std::size_t{1} << k) < m) ++k;
  return k;
}

struct NodePrimitive {
  std::vector<double> q;  // Q(j), j = 0..m: (1/2pi) int_0^{2 pi j/m} |g'|^2
  double factor;          // weight * 2r (1-r^2)
  int top_level;
};

// Q(j) = c_0 j/m + sum_{n != 0} c_n (e^{2 pi i n j/m} - 1)/(2 pi i n), with c_n
// the Fourier coefficients of |g'(r e^{it})|^2, exact for alias-free m.
std::vector<double> angular_primitive(const PowerSeries& gp, double r, std::size_t m) {
  auto v = evaluate_on_circle(gp, r, m);
  for (auto& x : v) x = std::norm(x);
  fft_inplace(v, -1);
  const double inv_m = 1.0 / static_cast<double>(m);
  const cplx c0 = v[0] * inv_m;
  std::vector<cplx> b(m);
  for (std::size_t n = 1; n < m; ++n) {
    if (n == m / 2) continue;
    const double freq = n < m / 2 ? static_cast<double>(n) : static_cast<double>(n) - static_cast<double>(m);
    b[n] = v[n] * inv_m / cplx(0.0, 2.0 * std::numbers::pi * freq);
  }
  fft_inplace(b, +1);
  std::vector<double> q(m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    q[j] = c0.real() * static_cast<double>(j) * inv_m + (b[j] - b[0]).real();
  }
  q[m] = c0.real();
  return q;
}

}  // namespace

int default_box_levels(const PowerSeries& g, const RadialScheme& scheme) {
  const std::size_t deg = g.degree() == 0 ? 0 : g.degree() - 1;
  return std::min(scheme.depth - 1, log2_exact(alias_free_samples(deg)) + 1);
}

MuGBoxTable::MuGBoxTable(const PowerSeries& g, const RadialScheme& scheme, int max_level) {
  scheme.validate();
  if (max_level < 0) throw ParameterError("max_level", "must be nonnegative");
  if (max_level > 26) throw ParameterError("max_level", "box table limited to 26 levels");
  const PowerSeries gp = derivative(g);
  const std::size_t m_alias = alias_free_samples(gp.degree());
  levels_.resize(static_cast<std::size_t>(max_level) + 1);
  levels_[0].assign(1, 0.0);
  for (int k = 1; k <= max_level; ++k) levels_[static_cast<std::size_t>(k)].assign(std::size_t{2} << k, 0.0);
  if (gp.is_constant() && gp[0] == cplx{}) return;

  const auto nodes = ring_nodes(scheme.depth, scheme.refinement);
  parallel_ordered<NodePrimitive>(
      nodes.size(),
      [&](std::size_t i) {
        const RadialNode& nd = nodes[i];
        const int top = std::min(nd.ring - 1, max_level);
        const std::size_t m = std::max(m_alias, std::size_t{2} << top);
        return NodePrimitive{angular_primitive(gp, nd.r, m),
                             nd.weight * 2.0 * nd.r * nd.gap * (2.0 - nd.gap), top};
      },
      [&](std::size_t, NodePrimitive node) {
        const std::size_t m = node.q.size() - 1;
        const double period = node.q[m];
        levels_[0][0] += node.factor * period;
        for (int k = 1; k <= node.top_level; ++k) {
          auto& row = levels_[static_cast<std::size_t>(k)];
          const std::size_t count = row.size();
          const std::size_t stride = m / count;
          const std::size_t len = 2 * stride;
          for (std::size_t a = 0; a < count; ++a) {
            const std::size_t s = a * stride;
            const std::size_t e = s + len;
            const double qe = e <= m ? node.q[e] : node.q[e - m] + period;
            row[a] += node.factor * (qe - node.q[s]);
          }
        }
      });
}

double MuGBoxTable::centred(int k, std::size_t i) const {
  const auto& row = level(k);
  const std::size_t n = row.size();
  return row[(i % n + n - 1) % n];
}

double MuGBoxTable::dyadic(int k, std::size_t j) const {
  if (k == 0) return levels_[0][0];
  const auto& row = level(k);
  const std::size_t n = row.size();
  return row[(2 * j + n - (n >> 2)) % n];
}

BmoaNorm bmoa_box_norm(const PowerSeries& g, const RadialScheme& scheme, int max_level) {
  const int levels = max_level < 0 ? default_box_levels(g, scheme) : max_level;
  const MuGBoxTable table(g, scheme, levels);
  BmoaNorm out{0.0, 0, 0, {}};
  double best = -1.0;
  for (int k = 0; k <= table.max_level(); ++k) {
    const auto& row = table.level(k);
    const double scale = std::ldexp(1.0, k);  // 1/(1-|a|)
    double level_best = -1.0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const double ratio = table.centred(k, i) * scale;
      if (ratio > level_best) level_best = ratio;
      if (ratio > best) {
        best = ratio;
        out.level = k;
        out.position = i;
      }
    }
    out.profile.push_back(level_best);
  }
  out.value = best + std::norm(g[0]);
  return out;
}

}  // namespace disclab
