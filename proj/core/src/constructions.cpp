#include "disclab/constructions.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <numbers>
#include <random>

#include "disclab/config.hpp"
#include "disclab/error.hpp"

namespace disclab {

std::vector<std::pair<std::uint64_t, double>> lacunary_terms(const PhiSpec& phi, double p, int K) {
  if (!(p > 0.0)) throw ParameterError("p", "must be positive");
  if (K < 1) throw ParameterError("K", "must be at least 1");
  if (K > 62) throw ParameterError("K", "index 2^K must fit in 64 bits");
  std::vector<std::pair<std::uint64_t, double>> terms;
  terms.reserve(static_cast<std::size_t>(K));
  const double ln2 = std::numbers::ln2;
  double h_prev = phi.log_value_at_lambda(0.0);
  for (int k = 1; k <= K; ++k) {
    const double lambda = k * ln2;
    const double h = phi.log_value_at_lambda(lambda);
    const double coeff = std::pow((h - h_prev) / phi.value_at_lambda(lambda), 1.0 / p);
    terms.emplace_back(std::uint64_t{1} << k, coeff);
    h_prev = h;
  }
  return terms;
}

Truncated lacunary_from_phi(const PhiSpec& phi, double p, int K) {
  if (K >= 1 && K <= 62 && (std::uint64_t{1} << K) > max_degree()) {
    throw DegreeOverflow(std::size_t{1} << K, max_degree());
  }
  const auto terms = lacunary_terms(phi, p, K);
  std::vector<cplx> c((std::size_t{1} << K) + 1);
  for (const auto& [index, value] : terms) c[index] = value;
  return {PowerSeries(std::move(c)), 1.0 / phi.value_at_lambda(K * std::numbers::ln2)};
}

Truncated test_function(const TestFnParams& params, std::size_t N) {
  const double abs_a = std::abs(params.a);
  if (!(abs_a < 1.0)) throw ParameterError("a", "|a| must be below 1");
  if (abs_a == 0.0) throw ParameterError("a", "must be nonzero");
  if (!(params.p > 0.0)) throw ParameterError("p", "must be positive");
  if (!(params.gamma > 0.0)) throw ParameterError("gamma", "must be positive");
  if (N > max_degree()) throw DegreeOverflow(N, max_degree());

  const double s = (1.0 + params.gamma) / params.p;
  const double log_gap = std::log1p(-abs_a * abs_a);  // log(1-|a|^2)
  const double log_abs = std::log(abs_a);
  const double lg_s = gsl_sf_lngamma(s);
  const cplx phase = std::conj(params.a) / abs_a;
  std::vector<cplx> c(N + 1);
  cplx rot = 1.0;
  for (std::size_t k = 0; k <= N; ++k) {
    const double kd = static_cast<double>(k);
    const double lg = s * log_gap + gsl_sf_lngamma(kd + s) - lg_s - gsl_sf_lngamma(kd + 1.0) +
                      kd * log_abs;
    c[k] = std::exp(lg) * rot;
    rot *= phase;
    if ((k & 63) == 63) rot /= std::abs(rot);
  }

  // |F(a)| = 1. Term ratios of sum_k |c_k| |a|^k are |a|^2 (k+s)/(k+1), so
  // past N they stay below rho and the tail is a geometric bound.
  const double nd = static_cast<double>(N);
  const double rho = abs_a * abs_a * std::max(1.0, (nd + 1.0 + s) / (nd + 2.0));
  double tail = std::numeric_limits<double>::infinity();
  if (rho < 1.0) {
    const double lg_next = s * log_gap + gsl_sf_lngamma(nd + 1.0 + s) - lg_s -
                           gsl_sf_lngamma(nd + 2.0) + 2.0 * (nd + 1.0) * log_abs;
    tail = std::exp(lg_next) / (1.0 - rho);
  }
  return {PowerSeries(std::move(c)), tail};
}

std::size_t test_function_degree(double abs_a) {
  const double want = 40.0 / -std::log(abs_a) + 64.0;
  const double cap = static_cast<double>(max_degree());
  return static_cast<std::size_t>(std::min(want, cap));
}

int counterexample_max_J() {
  int J = 0;
  while (J < 5 && (std::uint64_t{1} << (std::uint64_t{1} << (J + 1))) <= max_degree()) ++J;
  return J;
}

Truncated counterexample_symbol(double alpha, int J) {
  if (!(alpha > 1.0)) throw ParameterError("alpha", "must exceed 1");
  if (J < 1) throw ParameterError("J", "must be at least 1");
  if (J > counterexample_max_J()) {
    const std::size_t want = J >= 6 ? std::numeric_limits<std::size_t>::max()
                                    : std::size_t{1} << (std::size_t{1} << J);
    throw DegreeOverflow(want, max_degree());
  }
  std::vector<cplx> c((std::size_t{1} << (std::size_t{1} << J)) + 1);
  for (int j = 1; j <= J; ++j) {
    const double jp = j + 1.0;
    c[std::size_t{1} << (std::size_t{1} << j)] = 1.0 / (jp * std::pow(std::log(jp), alpha));
  }
  // sum_{j>J} 1/((j+1) log(j+1)^alpha) <= int_J^inf dx/((x+1) log(x+1)^alpha)
  const double tail = std::pow(std::log(J + 1.0), 1.0 - alpha) / (alpha - 1.0);
  return {PowerSeries(std::move(c)), tail};
}

PowerSeries log_series(std::size_t N) {
  if (N > max_degree()) throw DegreeOverflow(N, max_degree());
  std::vector<cplx> c(N + 1);
  for (std::size_t k = 1; k <= N; ++k) c[k] = 1.0 / static_cast<double>(k);
  return PowerSeries(std::move(c));
}

PowerSeries geometric(cplx w, std::size_t N) {
  if (N > max_degree()) throw DegreeOverflow(N, max_degree());
  std::vector<cplx> c(N + 1);
  cplx wk = 1.0;
  for (std::size_t k = 0; k <= N; ++k) {
    c[k] = wk;
    wk *= w;
  }
  return PowerSeries(std::move(c));
}

PowerSeries binomial_power(double beta, std::size_t N) {
  if (N > max_degree()) throw DegreeOverflow(N, max_degree());
  std::vector<cplx> c(N + 1);
  double ck = 1.0;
  for (std::size_t k = 0; k <= N; ++k) {
    c[k] = ck;
    ck *= (static_cast<double>(k) - beta) / static_cast<double>(k + 1);
  }
  return PowerSeries(std::move(c));
}

PowerSeries random_polynomial(std::size_t degree, std::uint64_t seed) {
  if (degree > max_degree()) throw DegreeOverflow(degree, max_degree());
  std::mt19937_64 gen(seed);
  auto draw = [&] { return 2.0 * std::ldexp(static_cast<double>(gen() >> 11), -53) - 1.0; };
  std::vector<cplx> c(degree + 1);
  for (auto& x : c) {
    const double re = draw();
    x = cplx(re, draw());
  }
  while (c.back() == cplx{}) {
    const double re = draw();
    c.back() = cplx(re, draw());
  }
  return PowerSeries(std::move(c));
}

}  // namespace disclab
