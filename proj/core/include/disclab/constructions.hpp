#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "disclab/phi.hpp"
#include "disclab/power_series.hpp"

namespace disclab {

/// A constructed series together with a bound on what the truncation dropped.
struct Truncated {
  PowerSeries series;
  double tail_bound = 0.0;
};

struct TestFnParams {
  cplx a;
  double p;
  double gamma;
};

/// Sparse form of the lacunary construction: pairs (2^k, coefficient),
/// k = 1..K. The coefficient at 2^k is ((h(r_k)-h(r_{k-1}))/Phi(r_k))^{1/p}
/// with r_k = 1-2^-k and h = log Phi. Needs no degree limit.
std::vector<std::pair<std::uint64_t, double>> lacunary_terms(const PhiSpec& phi, double p, int K);

/// Dense lacunary series. tail_bound = 1/Phi(r_K) dominates the dropped part of
/// the D^p_{p-1} sum. Throws DegreeOverflow when 2^K > max_degree().
Truncated lacunary_from_phi(const PhiSpec& phi, double p, int K);

/// First N+1 coefficients of ((1-|a|^2)/(1-conj(a) z))^s, s = (1+gamma)/p,
/// via log-gamma. tail_bound is the relative tail at z = a.
Truncated test_function(const TestFnParams& params, std::size_t N);

/// Degree large enough for test_function at |a| so that the relative tail at
/// z = a is below about e^-40, capped at max_degree().
std::size_t test_function_degree(double abs_a);

/// sum_{j=1}^{J} z^{2^{2^j}} / ((j+1) log(j+1)^alpha). The j = 0 term is
/// undefined (log 1 = 0) and omitted. tail_bound bounds the dropped l^1 mass.
Truncated counterexample_symbol(double alpha, int J);

/// Largest J accepted by counterexample_symbol under the current max degree.
int counterexample_max_J();

/// sum_{k=1}^{N} z^k / k, a truncation of log(1/(1-z)).
PowerSeries log_series(std::size_t N);
/// sum_{k=0}^{N} w^k z^k, a truncation of 1/(1-wz).
PowerSeries geometric(cplx w, std::size_t N);
/// Coefficients of (1-z)^beta up to z^N.
PowerSeries binomial_power(double beta, std::size_t N);

/// Coefficients uniform in [-1,1] + i[-1,1] from mt19937_64: each real draw
/// is (x >> 11) * 2^-53 mapped to [-1,1], real part first. Degree exactly
/// `degree` (top coefficient redrawn until nonzero).
PowerSeries random_polynomial(std::size_t degree, std::uint64_t seed);

}  // namespace disclab
