#include "disclab/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/error.hpp"
#include "disclab/maximal.hpp"
#include "disclab/means.hpp"
#include "disclab/parallel.hpp"
#include "disclab/summation.hpp"

namespace disclab {

double dp_norm(const PowerSeries& f, double p, const RadialScheme& scheme) {
  if (p == 2.0) return dirichlet_norm2_exact(f, 1.0);
  return dirichlet_norm(f, p, p - 1.0, scheme).value;
}

EmbeddingRatio embedding_ratio(const MeasureSpec& mu, const std::vector<PowerSeries>& family,
                               double p, double q, const RadialScheme& scheme) {
  if (family.empty()) throw ParameterError("family", "must be nonempty");
  if (!(p > 0.0) || !(q >= p)) throw ParameterError("q", "need q >= p > 0");
  EmbeddingRatio out;
  out.ratios = parallel_map<double>(family.size(), [&](std::size_t i) {
    const double norm = dp_norm(family[i], p, scheme);
    if (!(norm > 0.0)) {
      throw ParameterError("family", "member " + std::to_string(i) + " has zero norm");
    }
    return std::pow(lq_integral(mu, family[i], q, scheme), 1.0 / q) / norm;
  });
  for (std::size_t i = 0; i < out.ratios.size(); ++i) {
    if (out.ratios[i] > out.value) out.value = out.ratios[i], out.argmax = i;
  }
  return out;
}

MaximalProbe maximal_embedding_probe(const AtomList& mu, const std::vector<double>& phi, double p,
                                     double q, double alpha, int max_level) {
  if (!(p * alpha > 1.0)) throw ParameterError("alpha", "need p alpha > 1");
  if (!(q >= p)) throw ParameterError("q", "need q >= p");
  std::vector<double> root(phi.size());
  CompensatedSum lp;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    root[i] = std::pow(std::abs(phi[i]), 1.0 / alpha);
    lp += std::pow(std::abs(phi[i]), p);
  }
  const MaximalFunction M(root);
  CompensatedSum lhs;
  for (const Atom& at : mu.atoms) lhs += at.mass * std::pow(M(at.z), alpha * q);
  MaximalProbe out{};
  out.lhs = std::pow(lhs.value(), 1.0 / q);
  const MeasureSpec spec(mu);
  // the whole circle is an admissible arc too (|I| = 1, S(I) = D)
  out.carleson = std::max(carleson_constant(spec, Gauge(GaugePower{q / p}), max_level).sup_ratio,
                          total_mass(spec).value);
  const double norm = std::pow(lp.value() / static_cast<double>(phi.size()), 1.0 / p);
  out.rhs = norm * std::pow(out.carleson, 1.0 / q);
  return out;
}

}  // namespace disclab
