#include <doctest.h>

#include <cmath>

#include "disclab/constructions.hpp"
#include "disclab/error.hpp"
#include "disclab/means.hpp"
#include "disclab/phi.hpp"

using namespace disclab;

TEST_CASE("phi families") {
  const PhiSpec pl = PhiSpec::power_log(1.0);
  // Phi = log(e/(1-r)) for c = 1
  CHECK(pl.value(0.0) == doctest::Approx(1.0));
  CHECK(pl.value(0.75) == doctest::Approx(1.0 + std::log(4.0)));
  CHECK(pl.log_slope_at_lambda(3.0) == doctest::Approx(1.0 / 4.0));
  const PhiSpec il = PhiSpec::iterated_log(1, 1.0);
  CHECK(il.value(0.0) == doctest::Approx(2.0));
  CHECK(il.value(1.0 - std::exp(-5.0)) == doctest::Approx(7.0));
  CHECK_THROWS_AS(PhiSpec::power_log(-1.0).validate(), ParameterError);
  CHECK_THROWS_AS(PhiSpec::iterated_log(4, 1.0).validate(), ParameterError);
  // slope by finite difference in lambda
  for (const PhiSpec& phi : {PhiSpec::power_log(0.3), PhiSpec::iterated_log(2, 1.5), PhiSpec::iterated_log(3, 2.0)}) {
    const double l = 7.0, h = 1e-5;
    const double fd = (phi.log_value_at_lambda(l + h) - phi.log_value_at_lambda(l - h)) / (2 * h);
    CHECK(phi.log_slope_at_lambda(l) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("lacunary coefficients") {
  const PhiSpec phi = PhiSpec::power_log(1.0);
  const auto h = [&](double r) { return std::log(std::log(std::exp(1.0) / (1.0 - r))); };
  const PowerSeries f = lacunary_from_phi(phi, 2.0, 2).series;
  REQUIRE(f.degree() == 4);
  for (int n : {0, 1, 3}) CHECK(f[n] == cplx(0.0));
  CHECK(f[2].real() == doctest::Approx(std::sqrt((h(0.5) - h(0.0)) / phi.value(0.5))));
  CHECK(f[4].real() == doctest::Approx(std::sqrt((h(0.75) - h(0.5)) / phi.value(0.75))));

  const PowerSeries one = lacunary_from_phi(phi, 2.0, 1).series;
  int nonzero = 0;
  for (const cplx& c : one.coeffs()) nonzero += c != cplx(0.0);
  CHECK(nonzero == 1);
  CHECK(one[2] != cplx(0.0));

  // D^p_{p-1} norm below 1 (exact for p = 2)
  for (const PhiSpec& ph : {PhiSpec::power_log(0.2), PhiSpec::power_log(1.0), PhiSpec::iterated_log(1, 1.0)}) {
    const PowerSeries g = lacunary_from_phi(ph, 2.0, 12).series;
    CHECK(std::pow(dirichlet_norm2_exact(g, 1.0), 2.0) < 1.0);
  }
  const auto terms = lacunary_terms(phi, 2.0, 2);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].first == 2);
  CHECK(terms[1].first == 4);
  CHECK(terms[1].second == doctest::Approx(f[4].real()));
}

TEST_CASE("test function") {
  const PowerSeries f = test_function({0.5, 2.0, 1.0}, 30).series;
  CHECK(f[0].real() == doctest::Approx(0.75));
  // s = 1: (1-|a|^2) conj(a)^k
  const cplx a = std::polar(0.6, 0.7);
  const PowerSeries g = test_function({a, 2.0, 1.0}, 20).series;
  for (std::size_t k = 0; k <= 20; ++k) {
    CHECK(std::abs(g[k] - (1.0 - 0.36) * std::pow(std::conj(a), static_cast<double>(k))) < 1e-14);
  }
  // |F(a)| = (1-|a|^2)^{s} / (1-|a|^2)^{s} = 1 for the untruncated function
  for (int k = 1; k <= 12; ++k) {
    const cplx b = std::polar(1.0 - std::ldexp(1.0, -k), 1.1);
    const auto t = test_function({b, 4.0, 5.0}, test_function_degree(std::abs(b)));
    CHECK(std::abs(t.series(b)) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("counterexample symbol") {
  const PowerSeries g = counterexample_symbol(1.5, 2).series;
  REQUIRE(g.degree() == 16);
  int nonzero = 0;
  for (const cplx& c : g.coeffs()) nonzero += c != cplx(0.0);
  CHECK(nonzero == 2);
  CHECK(g[4].real() == doctest::Approx(1.0 / (2.0 * std::pow(std::log(2.0), 1.5))));
  CHECK(g[16].real() == doctest::Approx(1.0 / (3.0 * std::pow(std::log(3.0), 1.5))));
  CHECK(counterexample_max_J() == 4);
  CHECK_THROWS_AS(counterexample_symbol(1.5, 5), DegreeOverflow);
}

TEST_CASE("closed-form families") {
  const PowerSeries l = log_series(5);
  CHECK(l[0] == cplx(0.0));
  CHECK(l[4].real() == doctest::Approx(0.25));
  const PowerSeries b = binomial_power(0.5, 4);
  CHECK(b[1].real() == doctest::Approx(-0.5));
  CHECK(b[2].real() == doctest::Approx(-0.125));
  CHECK(std::abs(geometric(0.5, 60)(0.5) - 1.0 / 0.75) < 1e-15);
}
