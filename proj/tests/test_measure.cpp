#include <doctest.h>

#include <cmath>
#include <numbers>

#include "disclab/constructions.hpp"
#include "disclab/embedding.hpp"
#include "disclab/error.hpp"
#include "disclab/measure.hpp"
#include "disclab/quadrature.hpp"
#include "disclab/weights.hpp"

using namespace disclab;

TEST_CASE("box masses") {
  const MeasureSpec lebesgue = MeasureSpec::radial_formula(1.0, 0.0, 0.0);
  CHECK(box_mass(lebesgue, {1, 0}).value == doctest::Approx(0.375).epsilon(1e-12));
  for (int k = 1; k <= 20; k += 3) {
    const double l = std::ldexp(1.0, -k);
    CHECK(box_mass(lebesgue, {k, 1}).value == doctest::Approx(l * l * (2.0 - l)).epsilon(1e-12));
  }
  CHECK(total_mass(lebesgue).value == doctest::Approx(1.0));
  const MeasureSpec atom = MeasureSpec::atoms({{0.5, 1.0}});
  CHECK(box_mass(atom, {1, 0}).value == 1.0);
  CHECK(box_mass(atom, {1, 1}).value == 0.0);
  CHECK_THROWS_AS(box_mass(atom, {2, 4}), ParameterError);

  const MeasureSpec sharp = MeasureSpec::sharp(PhiSpec::iterated_log(2, 1.0), 4.0);
  for (int k : {2, 6, 11}) {
    const double a = box_mass(sharp, {k, 0}).value;
    CHECK(box_mass(sharp, {k, (std::uint64_t{1} << k) - 1}).value == a);
  }
  // box additivity of the nested grid
  const MeasureSpec w = MeasureSpec::radial_formula(2.0, 1.5, 0.5);
  const double parent = box_mass(w, {3, 2}).value;
  const double children = box_mass(w, {4, 4}).value + box_mass(w, {4, 5}).value;
  const double l = std::ldexp(1.0, -3);
  const double strip = 2.0 * l * simpson([&](double r) { return w.density_at_gap(1.0 - r) * r; }, 1.0 - l, 1.0 - l / 2, 2000);
  CHECK(parent == doctest::Approx(children + strip).epsilon(1e-10));
}

TEST_CASE("carleson constants") {
  const MeasureSpec lebesgue = MeasureSpec::radial_formula(1.0, 0.0, 0.0);
  const CarlesonReport r = carleson_constant(lebesgue, Gauge(GaugePower{2.0}), 20);
  CHECK(r.argmax_level == 20);
  CHECK(r.sup_ratio == doctest::Approx(2.0 - std::ldexp(1.0, -20)));

  const MeasureSpec atom = MeasureSpec::atoms({{std::polar(1.0 - std::ldexp(1.0, -5), 0.4), 0.25}});
  const CarlesonReport a = carleson_constant(atom, Gauge(GaugePower{1.0}), 12);
  CHECK(a.argmax_level == 5);
  CHECK(a.sup_ratio == doctest::Approx(0.25 * 32.0));

  const auto zero = vanishing_profile(MeasureSpec::radial_formula(0.0, 0.0, 0.0), Gauge(GaugePower{1.0}), 10);
  for (const auto& [lvl, v] : zero) CHECK(v == 0.0);
  const auto mu_z = vanishing_profile(MeasureSpec::radial_formula(1.0, 1.0, 0.0), Gauge(GaugePower{1.0}), 16);
  CHECK(mu_z.back().second < 1e-8);
  for (std::size_t i = 1; i < mu_z.size(); ++i) CHECK(mu_z[i].second <= mu_z[i - 1].second);
}

TEST_CASE("sharp measure against its gauge") {
  // Phi = IteratedLog{2,1} satisfies the tail hypotheses at p = 4
  const PhiSpec phi = PhiSpec::iterated_log(2, 1.0);
  const MeasureSpec mu = MeasureSpec::sharp(phi, 4.0);
  const BoxMass tot = total_mass(mu);
  CHECK_FALSE(tot.divergent);
  CHECK(std::isfinite(tot.value));
  const auto tail = vanishing_profile(mu, Gauge(GaugePowerLogPhi{1.0, 1.0, phi}), 20);
  CHECK(tail.back().second > 0.1);

  // Phi = IteratedLog{1,1}: each box mass diverges like int du/u
  const MeasureSpec bad = MeasureSpec::sharp(PhiSpec::iterated_log(1, 1.0), 4.0);
  CHECK(box_mass(bad, {4, 0}).divergent);
}

TEST_CASE("bernoulli-hospital") {
  const std::vector<double> lambdas{0.0, 3.0, 10.0 * std::numbers::ln2, 20.0};
  const BernoulliCheck b = bernoulli_hospital_check(PhiSpec::power_log(0.5), 4.0, lambdas);
  CHECK(b.hypotheses_hold);
  CHECK(b.limit_bound == doctest::Approx(2.0));
  for (const auto& row : b.rows) CHECK(row.ratio == doctest::Approx(2.0).epsilon(1e-10));

  for (double p : {4.0, 6.0}) {
    const BernoulliCheck c = bernoulli_hospital_check(PhiSpec::power_log(1e-300), p, lambdas);
    for (const auto& row : c.rows) CHECK(row.ratio == doctest::Approx(1.0 / (p / 2.0 - 1.0)).epsilon(1e-10));
  }
  const BernoulliCheck d = bernoulli_hospital_check(PhiSpec::iterated_log(1, 1.0), 4.0, lambdas);
  CHECK_FALSE(d.hypotheses_hold);
  for (const auto& row : d.rows) CHECK(row.divergent);
  CHECK_THROWS_AS(bernoulli_hospital_check(PhiSpec::power_log(0.5), 2.0, lambdas), ParameterError);
}

TEST_CASE("embedding ratio") {
  const std::vector<PowerSeries> ones{PowerSeries::constant(1.0)};
  CHECK(embedding_ratio(MeasureSpec::radial_formula(0.0, 0.0, 0.0), ones, 2.0, 4.0).value == 0.0);
  const MeasureSpec atoms = MeasureSpec::atoms({{0.3, 0.5}, {cplx(0.0, -0.9), 0.25}});
  CHECK(embedding_ratio(atoms, ones, 2.0, 4.0).value == doctest::Approx(std::pow(0.75, 0.25)));
  CHECK(dp_norm(monomial(1), 2.0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(dp_norm(monomial(3), 3.0) == doctest::Approx(std::pow(27.0 * std::beta(4.0, 3.0), 1.0 / 3.0)).epsilon(1e-10));
  CHECK_THROWS_AS(embedding_ratio(atoms, {}, 2.0, 4.0), ParameterError);
  CHECK_THROWS_AS(embedding_ratio(atoms, ones, 4.0, 2.0), ParameterError);
}

TEST_CASE("maximal embedding probe") {
  const AtomList mu{{{0.5, 0.3}, {std::polar(0.99, 1.0), 0.001}}};
  const MaximalProbe one = maximal_embedding_probe(mu, std::vector<double>(512, 1.0), 2.0, 4.0, 1.0);
  CHECK(one.lhs == doctest::Approx(std::pow(0.301, 0.25)));

  std::vector<double> phi(512);
  double mean = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    phi[j] = 1.0 + std::sin(7.0 * j);
    mean += phi[j] / 512.0;
  }
  const MaximalProbe centre = maximal_embedding_probe({{{0.0, 2.0}}}, phi, 2.0, 4.0, 1.0);
  CHECK(centre.lhs == doctest::Approx(std::pow(2.0, 0.25) * mean));
}
