#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "disclab/area_function.hpp"
#include "disclab/boxes.hpp"
#include "disclab/constructions.hpp"
#include "disclab/maximal.hpp"
#include "disclab/means.hpp"

using namespace disclab;

TEST_CASE("bmoa box norm") {
  CHECK(bmoa_box_norm(monomial(1)).value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(bmoa_box_norm(PowerSeries::constant(cplx(0.0, 2.0))).value == doctest::Approx(4.0));

  auto lac = [](int K, bool damped) {
    std::vector<cplx> c((std::size_t{1} << K) + 1);
    for (int k = 1; k <= K; ++k) c[std::size_t{1} << k] = damped ? 1.0 / k : 1.0;
    return PowerSeries(c);
  };
  const double u8 = bmoa_box_norm(lac(8, false)).value;
  const double u12 = bmoa_box_norm(lac(12, false)).value;
  CHECK(u12 > 1.3 * u8);
  CHECK(bloch_norm(lac(12, false)) < 4.0);
  const double d8 = bmoa_box_norm(lac(8, true)).value;
  const double d12 = bmoa_box_norm(lac(12, true)).value;
  CHECK(d12 < 1.05 * d8);
}

TEST_CASE("box table consistency") {
  const PowerSeries g = random_polynomial(20, 11);
  const MuGBoxTable t(g, {}, 6);
  // a dyadic box is one of the centred boxes of its level
  for (int k = 1; k <= 6; ++k) {
    for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
      bool found = false;
      for (double v : t.level(k)) found = found || v == t.dyadic(k, j);
      CHECK(found);
    }
  }
}

TEST_CASE("square function") {
  const StolzParams st{};
  CHECK(square_function(PowerSeries::constant(4.0), 1.0, st) == 0.0);
  const double area = stolz_area(st);
  for (double th : {0.0, 1.0, 2.5}) {
    CHECK(square_function(monomial(1), std::polar(1.0, th), st) == doctest::Approx(std::sqrt(area)).epsilon(1e-10));
  }

  // rejection sampling of int_Gamma |2z|^2 dA/pi at zeta = 1
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  constexpr int kSamples = 4000000;
  double acc = 0.0;
  int inside_disc = 0;
  while (inside_disc < kSamples) {
    const cplx z(u(gen), u(gen));
    const double rho = std::abs(z);
    if (rho >= 1.0) continue;
    ++inside_disc;
    if (rho <= 1.0 - st.vertex_cutoff && std::abs(1.0 - z) < st.sigma * (1.0 - rho)) acc += 4.0 * rho * rho;
  }
  const double mc = std::sqrt(acc / kSamples);
  CHECK(square_function(monomial(2), 1.0, st) == doctest::Approx(mc).epsilon(0.01));
}

TEST_CASE("fefferman-stein ratio") {
  CHECK(fefferman_stein(PowerSeries::constant(2.0), 2.0).ratio == doctest::Approx(1.0));
  const StolzParams st{};
  const FeffermanStein fs = fefferman_stein(monomial(1), 2.0, st);
  CHECK(fs.ratio * stolz_area(st) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("maximal function") {
  std::vector<double> two(256, -2.0);
  for (cplx z : {cplx(0.0), cplx(0.5, 0.3), std::polar(0.999, 2.0)}) CHECK(maximal_function(two, z) == doctest::Approx(2.0));

  constexpr std::size_t m = 1024;
  std::vector<double> upper(m, 0.0);
  for (std::size_t j = 0; j < m / 2; ++j) upper[j] = 1.0;
  std::mt19937_64 gen(5);
  std::vector<double> noise(m);
  for (double& v : noise) v = std::ldexp(static_cast<double>(gen() >> 11), -53);

  // every dyadic length L >= m(1-|z|), every start whose closed arc holds the angle
  auto scan = [&](const std::vector<double>& phi, cplx z) {
    double tau = std::arg(z) / (2.0 * std::numbers::pi) * m;
    if (tau < 0) tau += m;
    double best = 0.0;
    for (double v : phi) best += std::abs(v);
    best /= m;
    for (std::size_t len = m / 2; len >= 1 && len >= m * (1.0 - std::abs(z)); len /= 2) {
      for (std::size_t s = 0; s < m; ++s) {
        bool holds = false;
        for (double t : {tau - m, tau, tau + m}) holds = holds || (t >= s && t <= s + len);
        if (!holds) continue;
        double sum = 0.0;
        for (std::size_t i = 0; i < len; ++i) sum += std::abs(phi[(s + i) % m]);
        best = std::max(best, sum / len);
      }
    }
    return best;
  };
  for (cplx z : {cplx(0.99), cplx(0.0, 0.9), std::polar(0.999, 3.0), std::polar(0.3, -1.0)}) {
    CHECK(maximal_function(upper, z) == doctest::Approx(scan(upper, z)).epsilon(1e-14));
    CHECK(maximal_function(noise, z) == doctest::Approx(scan(noise, z)).epsilon(1e-14));
  }
  double mean = 0.0;
  for (double v : noise) mean += v;
  CHECK(maximal_function(noise, 0.0) >= mean / m - 1e-15);
  CHECK(maximal_function(noise, 0.0) == doctest::Approx(mean / m));
}
