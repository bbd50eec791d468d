#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "disclab/means.hpp"
#include "disclab/measure.hpp"
#include "disclab/phi.hpp"
#include "disclab/power_series.hpp"
#include "disclab/quadrature.hpp"

namespace disclab {

/// T_g f = int_0^z f g' on coefficients: c_0 = 0,
/// c_n = (1/n) sum_{j<n} a_j (n-j) b_{n-j}, truncated at max_degree().
PowerSeries tg_apply(const PowerSeries& f, const PowerSeries& g);

struct OperatorProbe {
  PowerSeries symbol;
  double p = 2.0;
  double q = 2.0;
  std::vector<std::pair<std::string, PowerSeries>> family;
};

struct ProbeResult {
  double bound = 0.0;
  std::size_t argmax = 0;
  std::vector<double> ratios;
};

/// max over the family of ||T_g f||_{H^q} / ||f||_{D^p_{p-1}}.
ProbeResult opnorm_lower_bound(const OperatorProbe& probe, const RadialScheme& scheme = {});

struct ProfilePoint {
  int level;
  double r;
  double value;
};

/// M_inf(r_k, g') (1-r_k)^{1-1/p+1/q}, k = 1..depth.
std::vector<ProfilePoint> lemma1_profile(const PowerSeries& g, double p, double q,
                                         const RadialScheme& scheme = {});

struct LipschitzProfile {
  /// M_inf(r_k, g') (1-r_k)^{1-alpha}, k = 1..depth.
  std::vector<ProfilePoint> growth;
  double growth_sup;
  /// max over dyadic I at level k of mu_g(S(I)) / |I|^{2 alpha + 1}.
  std::vector<ProfilePoint> boxes;
  double box_sup;
  /// Last entries of both profiles (little-oh trend).
  double growth_tail;
  double box_tail;
};

LipschitzProfile lipschitz_profile(const PowerSeries& g, double alpha,
                                   const RadialScheme& scheme = {});

struct DivergenceSequences {
  /// S_J = sum_{j=1}^{J} 2^{(j+1)(1-(2/p)(1+eps))} / ((j+1)^2 log(j+1)^{2 alpha}).
  std::vector<double> series;
  /// Q_k = int_0^{r_k} r (1-r) (log e/(1-r))^{1-(2/p)(1+eps)} M_2^2(r, g') dr.
  std::vector<double> quadrature;
  int symbol_J;
};

/// Throws ParameterError unless p > 2, 0 < eps < p/2 - 1, alpha > 1.
DivergenceSequences counterexample_divergence(double p, double eps, double alpha, int J_max,
                                              const RadialScheme& scheme = {});

struct GrowthExperiment {
  std::vector<int> levels;
  std::vector<double> m2;        // M_2(r_k, f)
  std::vector<double> mp;        // M_p(r_k, f)
  std::vector<double> normalized;  // M_p / (log e/(1-r))^{1/2-1/p}
  /// (log e/(1-r))^{1/2} (h'(r)(1-r)/Phi(r))^{1/p}
  std::vector<double> sharp_curve;
  GrowthFit lower;  // slope of log M_2
  GrowthFit upper;  // slope of log M_p
  GrowthFit curve;  // slope of the sharp curve
};

/// f = lacunary_from_phi(phi, p, K) (max degree raised to 2^K for the
/// duration), sampled at r_k for k = 1..max(K, last) and fitted over levels
/// [first, last] (last <= 60).
GrowthExperiment growth_experiment(const PhiSpec& phi, double p, int K, int first, int last);

}  // namespace disclab
