#include "disclab/volterra.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <cmath>
#include <numbers>

#include "disclab/boxes.hpp"
#include "disclab/config.hpp"
#include "disclab/constructions.hpp"
#include "disclab/embedding.hpp"
#include "disclab/error.hpp"
#include "disclab/means.hpp"
#include "disclab/parallel.hpp"
#include "disclab/summation.hpp"

namespace disclab {
namespace {

double hardy_value(const PowerSeries& f, double q) {
  if (q == 2.0) {
    CompensatedSum s;
    for (const cplx& c : f.coeffs()) s += std::norm(c);
    return std::sqrt(s.value());
  }
  return integral_mean(f, q, 1.0);
}

double sup_derivative(const PowerSeries& gp, double r, std::size_t m) {
  if (gp.is_constant()) return std::abs(gp[0]);
  return sup_mean(gp, r, m).value;
}

}  // namespace

PowerSeries tg_apply(const PowerSeries& f, const PowerSeries& g) {
  return primitive(cauchy_product(f, derivative(g)));
}

ProbeResult opnorm_lower_bound(const OperatorProbe& probe, const RadialScheme& scheme) {
  if (probe.family.empty()) throw ParameterError("family", "must be nonempty");
  ProbeResult out;
  out.ratios = parallel_map<double>(probe.family.size(), [&](std::size_t i) {
    const PowerSeries& f = probe.family[i].second;
    const double den = dp_norm(f, probe.p, scheme);
    if (!(den > 0.0)) {
      throw ParameterError("family", "member '" + probe.family[i].first + "' has zero norm");
    }
    return hardy_value(tg_apply(f, probe.symbol), probe.q) / den;
  });
  for (std::size_t i = 0; i < out.ratios.size(); ++i) {
    if (out.ratios[i] > out.bound) out.bound = out.ratios[i], out.argmax = i;
  }
  return out;
}

std::vector<ProfilePoint> lemma1_profile(const PowerSeries& g, double p, double q,
                                         const RadialScheme& scheme) {
  scheme.validate();
  if (!(p > 0.0) || !(q > 0.0)) throw ParameterError("p", "p and q must be positive");
  const PowerSeries gp = derivative(g);
  const double e = 1.0 - 1.0 / p + 1.0 / q;
  return parallel_map<ProfilePoint>(static_cast<std::size_t>(scheme.depth), [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    const double gap = std::ldexp(1.0, -k);
    return ProfilePoint{k, 1.0 - gap, sup_derivative(gp, 1.0 - gap, scheme.angular_m) * std::pow(gap, e)};
  });
}

LipschitzProfile lipschitz_profile(const PowerSeries& g, double alpha, const RadialScheme& scheme) {
  scheme.validate();
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha", "must lie in (0,1]");
  const PowerSeries gp = derivative(g);
  LipschitzProfile out{};
  out.growth = parallel_map<ProfilePoint>(static_cast<std::size_t>(scheme.depth), [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    const double gap = std::ldexp(1.0, -k);
    return ProfilePoint{k, 1.0 - gap,
                        sup_derivative(gp, 1.0 - gap, scheme.angular_m) * std::pow(gap, 1.0 - alpha)};
  });
  const MuGBoxTable table(g, scheme, std::max(1, default_box_levels(g, scheme)));
  for (int k = 1; k <= table.max_level(); ++k) {
    const std::size_t count = std::size_t{1} << k;
    double best = 0.0;
    for (std::size_t j = 0; j < count; ++j) best = std::max(best, table.dyadic(k, j));
    const double len = std::ldexp(1.0, -k);
    out.boxes.push_back({k, 1.0 - len, best / std::pow(len, 2.0 * alpha + 1.0)});
  }
  for (const auto& pt : out.growth) out.growth_sup = std::max(out.growth_sup, pt.value);
  for (const auto& pt : out.boxes) out.box_sup = std::max(out.box_sup, pt.value);
  out.growth_tail = out.growth.back().value;
  out.box_tail = out.boxes.back().value;
  return out;
}

DivergenceSequences counterexample_divergence(double p, double eps, double alpha, int J_max,
                                              const RadialScheme& scheme) {
  if (!(p > 2.0)) throw ParameterError("p", "must exceed 2");
  if (!(eps > 0.0 && eps < p / 2.0 - 1.0)) throw ParameterError("eps", "must lie in (0, p/2-1)");
  if (!(alpha > 1.0)) throw ParameterError("alpha", "must exceed 1");
  if (J_max < 1) throw ParameterError("J_max", "must be at least 1");
  scheme.validate();
  const double e = 1.0 - (2.0 / p) * (1.0 + eps);
  DivergenceSequences out;
  CompensatedSum s;
  for (int j = 1; j <= J_max; ++j) {
    const double jp = j + 1.0;
    s += std::exp2(jp * e) / (jp * jp * std::pow(std::log(jp), 2.0 * alpha));
    out.series.push_back(s.value());
  }

  out.symbol_J = counterexample_max_J();
  if (out.symbol_J < 1) throw DegreeOverflow(4, max_degree());
  const PowerSeries g = counterexample_symbol(alpha, out.symbol_J).series;
  // M_2^2(r, g') = sum n^2 |b_n|^2 r^{2n-2} over the few nonzero b_n
  std::vector<std::pair<double, double>> terms;
  for (std::size_t n = 1; n <= g.degree(); ++n) {
    if (g[n] != cplx{}) terms.emplace_back(static_cast<double>(n), std::norm(g[n]));
  }
  const auto nodes = ring_nodes(scheme.depth, scheme.refinement);
  CompensatedSum q;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const RadialNode& nd = nodes[i];
    double m2 = 0.0;
    for (const auto& [n, b2] : terms) m2 += n * n * b2 * std::exp((2.0 * n - 2.0) * std::log1p(-nd.gap));
    q += nd.weight * nd.r * nd.gap * std::pow(1.0 - std::log(nd.gap), e) * m2;
    if (i + 1 == nodes.size() || nodes[i + 1].ring != nd.ring) out.quadrature.push_back(q.value());
  }
  return out;
}

namespace {

// For sum c_k z^{2^k} the differences 2^k - 2^j (j < k) are distinct and
// nonzero, so mean |f|^4 = 2 (sum |c_k|^2)^2 - sum |c_k|^4 exactly.
double lacunary_mean4(const std::vector<std::pair<std::uint64_t, double>>& terms, double gap) {
  double s2 = 0.0, s4 = 0.0;
  const double lr = std::log1p(-gap);
  for (const auto& [n, c] : terms) {
    const double a2 = c * c * std::exp(2.0 * static_cast<double>(n) * lr);
    s2 += a2;
    s4 += a2 * a2;
  }
  return std::pow(2.0 * s2 * s2 - s4, 0.25);
}

}  // namespace

GrowthExperiment growth_experiment(const PhiSpec& phi, double p, int K, int first, int last) {
  if (!(p > 2.0)) throw ParameterError("p", "must exceed 2");
  if (K < 1) throw ParameterError("K", "must be at least 1");
  if (first < 1 || last > 60 || last - first < 2) {
    throw ParameterError("window", "need 1 <= first, last <= 60 and at least 3 levels");
  }
  phi.validate();
  const auto terms = lacunary_terms(phi, p, K);
  GrowthExperiment out;
  for (int k = 1; k <= std::max(K, last); ++k) out.levels.push_back(k);
  const bool exact4 = p == 4.0;
  std::optional<PowerSeries> dense;
  std::optional<ScopedMaxDegree> widen;
  if (!exact4) {
    widen.emplace(std::max(max_degree(), std::size_t{1} << K));
    dense = lacunary_from_phi(phi, p, K).series;
  }
  const auto rows = parallel_map<std::array<double, 2>>(out.levels.size(), [&](std::size_t i) {
    const double gap = std::ldexp(1.0, -out.levels[i]);
    const double lr = std::log1p(-gap);
    double s2 = 0.0;
    for (const auto& [n, c] : terms) s2 += c * c * std::exp(2.0 * static_cast<double>(n) * lr);
    const double mp = exact4 ? lacunary_mean4(terms, gap) : integral_mean(*dense, p, 1.0 - gap);
    return std::array<double, 2>{std::sqrt(s2), mp};
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double lambda = out.levels[i] * std::numbers::ln2;
    const double u = 1.0 + lambda;
    out.m2.push_back(rows[i][0]);
    out.mp.push_back(rows[i][1]);
    out.normalized.push_back(rows[i][1] / std::pow(u, 0.5 - 1.0 / p));
    out.sharp_curve.push_back(
        std::sqrt(u) * std::pow(phi.log_slope_at_lambda(lambda) / phi.value_at_lambda(lambda), 1.0 / p));
  }
  out.lower = fit_growth(out.levels, out.m2, first, last);
  out.upper = fit_growth(out.levels, out.mp, first, last);
  out.curve = fit_growth(out.levels, out.sharp_curve, first, last);
  return out;
}

}  // namespace disclab
