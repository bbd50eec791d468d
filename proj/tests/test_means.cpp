#include <doctest.h>

#include <cmath>
#include <numbers>

#include "disclab/constructions.hpp"
#include "disclab/error.hpp"
#include "disclab/means.hpp"
#include "disclab/phi.hpp"
#include "disclab/summation.hpp"

using namespace disclab;

namespace {

// |f(0)|^4 + sum |b_n|^2 B(n+1, 4) with (f')^2 = sum b_n z^n; B(n+1,4) = 6/((n+1)(n+2)(n+3)(n+4))
double d43_fourth_power(const PowerSeries& f) {
  const PowerSeries fp = derivative(f);
  CompensatedSum s;
  s += std::pow(std::abs(f[0]), 4.0);
  const std::size_t n_max = 2 * fp.degree();
  for (std::size_t n = 0; n <= n_max; ++n) {
    cplx b = 0.0;
    for (std::size_t j = 0; j <= n; ++j) b += fp[j] * fp[n - j];
    const double nd = static_cast<double>(n);
    s += std::norm(b) * 6.0 / ((nd + 1) * (nd + 2) * (nd + 3) * (nd + 4));
  }
  return s.value();
}

}  // namespace

TEST_CASE("integral means") {
  const PowerSeries c = PowerSeries::constant(cplx(3.0, 4.0));
  for (double p : {0.5, 1.0, 2.0, 4.0, kInfinity}) CHECK(integral_mean(c, p, 0.7) == doctest::Approx(5.0));
  for (double r : {0.1, 0.5, 0.9, 1.0}) CHECK(integral_mean(monomial(5), 2.0, r) == doctest::Approx(std::pow(r, 5)));

  const auto terms = lacunary_terms(PhiSpec::power_log(0.5), 2.0, 10);
  std::vector<cplx> coeffs(1025);
  for (const auto& [n, a] : terms) coeffs[n] = a;
  const PowerSeries f(coeffs);
  for (double r : {0.5, 0.99, 0.999}) {
    double want = 0.0;
    for (const auto& [n, a] : terms) want += a * a * std::pow(r, 2.0 * static_cast<double>(n));
    CHECK(integral_mean(f, 2.0, r) == doctest::Approx(std::sqrt(want)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(integral_mean(c, -1.0, 0.5), ParameterError);
}

TEST_CASE("sup mean") {
  CHECK(sup_mean(monomial(1), 0.9).value == doctest::Approx(0.9));
  const PowerSeries g = geometric(0.5, 200);
  CHECK(sup_mean(g, 1.0).value == doctest::Approx(2.0).epsilon(1e-12));
  const PowerSeries f = random_polynomial(30, 9);
  const double s = sup_mean(f, 0.8).value;
  for (double p : {1.0, 2.0, 6.0}) CHECK(s >= integral_mean(f, p, 0.8));
}

TEST_CASE("hardy norm") {
  const PowerSeries f(std::vector<cplx>{1.0, 1.0});
  const HardyNorm h = hardy_norm(f, 2.0);
  CHECK(h.value == doctest::Approx(std::sqrt(2.0)));
  CHECK(h.parseval == doctest::Approx(std::sqrt(2.0)));
  CHECK(hardy_norm(PowerSeries::constant(-2.0), 3.0).value == doctest::Approx(2.0));
  const HardyNorm g = hardy_norm(random_polynomial(40, 4), 2.0);
  for (std::size_t k = 1; k < g.means.size(); ++k) CHECK(g.means[k] >= g.means[k - 1] * (1.0 - 1e-12));
}

TEST_CASE("dirichlet norms") {
  CHECK(dirichlet_norm(monomial(1), 2.0, 1.0).pth_power == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dirichlet_norm2_exact(monomial(1), 1.0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(dirichlet_norm(PowerSeries::constant(2.0), 3.0, 2.0).pth_power == doctest::Approx(8.0));
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const PowerSeries f = random_polynomial(2 + seed * 3, seed);
    const DirichletNorm q = dirichlet_norm(f, 4.0, 3.0);
    CHECK(q.pth_power == doctest::Approx(d43_fourth_power(f)).epsilon(1e-10));
    CHECK_FALSE(q.divergent);
    const DirichletNorm two = dirichlet_norm(f, 2.0, 1.5);
    CHECK(two.value == doctest::Approx(dirichlet_norm2_exact(f, 1.5)).epsilon(1e-10));
  }
}

TEST_CASE("bloch norm") {
  CHECK(bloch_norm(monomial(1)) == doctest::Approx(1.0));
  CHECK(bloch_norm(PowerSeries::constant(-3.0)) == doctest::Approx(3.0));
  const PowerSeries l = log_series(4096);
  const double b20 = bloch_norm(l, {20, 0, 8});
  const double b24 = bloch_norm(l, {24, 0, 8});
  CHECK(b24 >= 1.0);
  CHECK(b24 <= 2.0);
  CHECK(b24 == doctest::Approx(b20).epsilon(1e-12));
}

TEST_CASE("growth fit") {
  std::vector<int> levels;
  std::vector<double> values;
  for (int k = 1; k <= 20; ++k) {
    levels.push_back(k);
    values.push_back(3.0 * std::pow(1.0 + k * std::numbers::ln2, 0.7));
  }
  const GrowthFit fit = fit_growth(levels, values, 5, 20);
  CHECK(fit.slope == doctest::Approx(0.7));
  CHECK(fit.max_residual < 1e-12);
  CHECK_THROWS_AS(fit_growth(levels, values, 5, 5), ParameterError);
}
