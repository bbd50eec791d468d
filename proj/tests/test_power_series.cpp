#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "disclab/circle.hpp"
#include "disclab/config.hpp"
#include "disclab/error.hpp"
#include "disclab/constructions.hpp"
#include "disclab/power_series.hpp"

using namespace disclab;

namespace {

cplx horner_direct(const PowerSeries& f, cplx z) {
  cplx acc = 0.0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * z + f.coeffs()[k];
  return acc;
}

}  // namespace

TEST_CASE("monomial") {
  CHECK(monomial(0).degree() == 0);
  CHECK(monomial(0)[0] == cplx(1.0));
  const PowerSeries m3 = monomial(3);
  REQUIRE(m3.coeffs().size() == 4);
  CHECK(m3[0] == cplx(0.0));
  CHECK(m3[2] == cplx(0.0));
  CHECK(m3[3] == cplx(1.0));
  CHECK(std::abs(monomial(2)(0.5) - 0.25) < 1e-15);
}

TEST_CASE("degree limit") {
  ScopedMaxDegree limit(8);
  CHECK_THROWS_AS(monomial(9), DegreeOverflow);
  CHECK_NOTHROW(monomial(8));
}

TEST_CASE("derivative, primitive, dilate, product") {
  const PowerSeries f = random_polynomial(40, 3);
  CHECK(max_coeff_distance(derivative(primitive(f)), f) < 1e-14);
  CHECK(std::abs(dilate(monomial(3), 0.5)[3] - 0.125) < 1e-15);

  const PowerSeries a(std::vector<cplx>{1.0, 1.0});
  const PowerSeries b(std::vector<cplx>{1.0, -1.0});
  const PowerSeries c = cauchy_product(a, b);
  CHECK(max_coeff_distance(c, PowerSeries(std::vector<cplx>{1.0, 0.0, -1.0})) < 1e-15);

  // FFT route against the direct product
  const PowerSeries big1 = random_polynomial(3000, 5);
  const PowerSeries big2 = random_polynomial(3000, 6);
  const PowerSeries prod = cauchy_product(big1, big2);
  for (std::size_t n : {std::size_t{0}, std::size_t{17}, std::size_t{2999}, std::size_t{6000}}) {
    cplx want = 0.0;
    for (std::size_t j = 0; j <= n; ++j) want += big1[j] * big2[n - j];
    CHECK(std::abs(prod[n] - want) < 1e-10);
  }
}

TEST_CASE("circle sampling") {
  for (double r : {0.0, 0.3, 1.0}) {
    for (const cplx& v : evaluate_on_circle(PowerSeries::constant(1.0), r, 8)) {
      CHECK(std::abs(v - 1.0) < 1e-15);
    }
  }
  const auto z = evaluate_on_circle(monomial(1), 0.5, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    CHECK(std::abs(z[j] - std::polar(0.5, 2.0 * std::numbers::pi * j / 8.0)) < 1e-15);
  }
  CHECK_THROWS_AS(evaluate_on_circle(monomial(8), 1.0, 8), AliasingError);
  CHECK(alias_free_samples(0) == 4);
  CHECK(alias_free_samples(64) == 256);
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(1000));
}

TEST_CASE("circle samples agree with Horner") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PowerSeries f = random_polynomial(64, seed);
    const std::size_t m = alias_free_samples(64);
    const double r = 0.95;
    const auto vals = evaluate_on_circle(f, r, m);
    for (std::size_t j = 0; j < m; j += 7) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / m);
      CHECK(std::abs(vals[j] - horner_direct(f, z)) < 1e-12);
      CHECK(std::abs(f(z) - horner_direct(f, z)) < 1e-12);
    }
  }
}

TEST_CASE("random polynomial determinism") {
  const PowerSeries a = random_polynomial(50, 42);
  const PowerSeries b = random_polynomial(50, 42);
  CHECK(a.degree() == 50);
  CHECK(max_coeff_distance(a, b) == 0.0);
  for (const cplx& c : a.coeffs()) {
    CHECK(std::abs(c.real()) <= 1.0);
    CHECK(std::abs(c.imag()) <= 1.0);
  }
}
