#include <doctest.h>

#include <cmath>

#include "disclab/constructions.hpp"
#include "disclab/error.hpp"
#include "disclab/volterra.hpp"

using namespace disclab;

TEST_CASE("tg_apply") {
  const PowerSeries g = random_polynomial(25, 31);
  const PowerSeries one = tg_apply(PowerSeries::constant(1.0), g);
  CHECK(max_coeff_distance(one, g - PowerSeries::constant(g[0])) < 1e-15);

  const PowerSeries t = tg_apply(monomial(2), monomial(3));
  REQUIRE(t.degree() == 5);
  CHECK(t[5].real() == doctest::Approx(0.6));
  for (std::size_t k = 0; k < 5; ++k) CHECK(t[k] == cplx(0.0));

  const PowerSeries f = random_polynomial(40, 32);
  CHECK(max_coeff_distance(tg_apply(f, PowerSeries::constant(5.0)), PowerSeries::constant(0.0)) == 0.0);
  CHECK(tg_apply(f, g)[0] == cplx(0.0));
}

TEST_CASE("tg_apply identities") {
  const PowerSeries f = random_polynomial(30, 41);
  const PowerSeries g = random_polynomial(33, 42);
  const PowerSeries h = random_polynomial(20, 43);
  const cplx a(0.3, -1.2), b(-2.0, 0.5);
  CHECK(max_coeff_distance(tg_apply(a * f + b * h, g), a * tg_apply(f, g) + b * tg_apply(h, g)) < 1e-13);
  const PowerSeries sym = tg_apply(f, g) + tg_apply(g, f);
  CHECK(max_coeff_distance(sym, cauchy_product(f, g) - PowerSeries::constant(f[0] * g[0])) < 1e-13);

  // continuity in the dilation parameter at r = 1 - 2^-10
  const double r = 1.0 - std::ldexp(1.0, -10);
  const PowerSeries near = tg_apply(f, dilate(g, r));
  const PowerSeries at = tg_apply(f, g);
  const double dist = max_coeff_distance(near, at);
  CHECK(dist > 0.0);
  CHECK(dist < 100.0 * (1.0 - r));
}

TEST_CASE("operator norm lower bounds") {
  OperatorProbe flat{PowerSeries::constant(3.0), 2.0, 2.0, {{"one", PowerSeries::constant(1.0)}}};
  CHECK(opnorm_lower_bound(flat).bound == 0.0);
  OperatorProbe id{monomial(1), 2.0, 2.0, {{"one", PowerSeries::constant(1.0)}}};
  CHECK(opnorm_lower_bound(id).bound == doctest::Approx(1.0));
  // the bound never decreases when the family grows
  id.family.emplace_back("z", monomial(1));
  id.family.emplace_back("rand", random_polynomial(12, 3));
  const ProbeResult grown = opnorm_lower_bound(id);
  CHECK(grown.bound >= 1.0);
  CHECK(grown.ratios.size() == 3);
  OperatorProbe zero{monomial(1), 2.0, 2.0, {{"zero", PowerSeries::constant(0.0)}}};
  CHECK_THROWS_AS(opnorm_lower_bound(zero), ParameterError);
}

TEST_CASE("lemma1 profile") {
  for (const auto& pt : lemma1_profile(PowerSeries::constant(1.0), 2.0, 3.0)) CHECK(pt.value == 0.0);
  for (const auto& pt : lemma1_profile(monomial(1), 2.0, 2.0)) CHECK(pt.value == doctest::Approx(1.0 - pt.r));
  const auto grow = lemma1_profile(geometric(1.0, 4096), 2.0, 2.0, {10, 0, 8});
  CHECK(grow.back().value > 8.0 * grow[4].value);
}

TEST_CASE("lipschitz profile") {
  const LipschitzProfile id = lipschitz_profile(monomial(1), 1.0, {12, 0, 8});
  CHECK(id.growth_sup == doctest::Approx(1.0));
  CHECK(id.box_sup < 2.0);

  const LipschitzProfile root = lipschitz_profile(binomial_power(0.5, 4096), 0.5, {10, 0, 8});
  CHECK(root.growth_tail < 2.0 * root.growth[4].value);
  CHECK(root.box_tail < 2.0 * root.boxes[4].value);

  const LipschitzProfile lg = lipschitz_profile(log_series(4096), 0.5, {10, 0, 8});
  CHECK(lg.growth_tail > 4.0 * lg.growth[4].value);
  CHECK_THROWS_AS(lipschitz_profile(monomial(1), 1.5), ParameterError);
}

TEST_CASE("counterexample divergence") {
  const DivergenceSequences d = counterexample_divergence(3.0, 0.2, 1.5, 40, {12, 0, 8});
  for (std::size_t j = 1; j < d.series.size(); ++j) CHECK(d.series[j] > d.series[j - 1]);
  for (std::size_t k = 1; k < d.quadrature.size(); ++k) CHECK(d.quadrature[k] >= d.quadrature[k - 1]);
  const DivergenceSequences big = counterexample_divergence(50.0, 0.2, 1.5, 40, {12, 0, 8});
  for (std::size_t j = 0; j < d.series.size(); ++j) CHECK(big.series[j] >= d.series[j]);
  CHECK_THROWS_AS(counterexample_divergence(2.0, 0.2, 1.5, 40), ParameterError);
  CHECK_THROWS_AS(counterexample_divergence(3.0, 0.6, 1.5, 40), ParameterError);
  CHECK_THROWS_AS(counterexample_divergence(3.0, 0.2, 1.0, 40), ParameterError);
}

TEST_CASE("growth experiment") {
  const GrowthExperiment one = growth_experiment(PhiSpec::power_log(0.2), 4.0, 1, 20, 40);
  CHECK(std::abs(one.lower.slope) < 1e-5);
  CHECK(one.m2.back() == doctest::Approx(one.m2.front() / std::pow(0.5, 2.0)).epsilon(1e-9));

  // lacunary M_4 identity against FFT sampling
  const GrowthExperiment g = growth_experiment(PhiSpec::power_log(0.2), 4.0, 12, 4, 12);
  const PowerSeries f = lacunary_from_phi(PhiSpec::power_log(0.2), 4.0, 12).series;
  for (std::size_t i = 0; i < g.levels.size(); i += 3) {
    const double r = 1.0 - std::ldexp(1.0, -g.levels[i]);
    CHECK(g.mp[i] == doctest::Approx(integral_mean(f, 4.0, r)).epsilon(1e-12));
    CHECK(g.m2[i] == doctest::Approx(integral_mean(f, 2.0, r)).epsilon(1e-12));
  }

  // the M_p curve stays on the lower-bound side of the sharp curve up to a constant
  const GrowthExperiment il = growth_experiment(PhiSpec::iterated_log(1, 1.0), 4.0, 20, 4, 20);
  double lo = kInfinity, hi = 0.0;
  for (std::size_t i = 0; i < il.levels.size(); ++i) {
    if (il.levels[i] < 4) continue;
    lo = std::min(lo, il.mp[i] / il.sharp_curve[i]);
    hi = std::max(hi, il.mp[i] / il.sharp_curve[i]);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 4.0);
  CHECK_THROWS_AS(growth_experiment(PhiSpec::power_log(0.2), 4.0, 20, 8, 8), ParameterError);
}
