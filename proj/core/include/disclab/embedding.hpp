#pragma once

#include <cstddef>
#include <vector>

#include "disclab/measure.hpp"
#include "disclab/power_series.hpp"
#include "disclab/quadrature.hpp"

namespace disclab {

/// ||f||_{D^p_{p-1}}: exact coefficient route for p = 2, quadrature otherwise.
double dp_norm(const PowerSeries& f, double p, const RadialScheme& scheme = {});

struct EmbeddingRatio {
  double value = 0.0;
  std::size_t argmax = 0;
  std::vector<double> ratios;
};

/// max over the family of (int |f|^q dmu)^{1/q} / ||f||_{D^p_{p-1}}.
/// Throws ParameterError for an empty family, q < p, or a zero-norm member.
EmbeddingRatio embedding_ratio(const MeasureSpec& mu, const std::vector<PowerSeries>& family,
                               double p, double q, const RadialScheme& scheme = {});

struct MaximalProbe {
  double lhs;
  double rhs;
  double carleson;  // sup mu(S(I))/|I|^{q/p}, the whole disc included
};

/// lhs = (sum mass [M(|phi|^{1/alpha})(z)]^{alpha q})^{1/q},
/// rhs = ||phi||_{L^p} * carleson^{1/q}. Throws ParameterError unless
/// p alpha > 1 and q >= p.
MaximalProbe maximal_embedding_probe(const AtomList& mu, const std::vector<double>& phi, double p,
                                     double q, double alpha, int max_level = 40);

}  // namespace disclab
