#include "disclab/phi.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "disclab/error.hpp"

namespace disclab {
namespace {

// exp_j(2) for j = 0, 1, 2; exp_3(2) overflows a double.
constexpr double kExp2Tower[] = {2.0, 7.38905609893065, 1618.1779919126539};

struct Chain {
  double psi;      // log_N(exp_N(2)/(1-r))
  double product;  // l_1 ... l_N
};

// l_1 = log(exp_N(2)/(1-r)) = E_{N-1} + lambda and l_{i+1} = log l_i. Writing
// l_i = E_{N-i} + d_i gives d_{i+1} = log1p(d_i / E_{N-i}), which keeps the
// small increments exact when lambda is tiny.
Chain iterated_chain(int n, double lambda) {
  double d = lambda;
  double product = 1.0;
  for (int i = 1; i <= n; ++i) {
    const double e = kExp2Tower[n - i];
    product *= e + d;
    if (i < n) d = std::log1p(d / e);
  }
  return {kExp2Tower[0] + d, product};
}

}  // namespace

double lambda_of_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw ParameterError("r", "radius must lie in [0,1)");
  return -std::log1p(-r);
}

PhiSpec::PhiSpec(Variant v) : v_(v) {
  if (const auto* p = std::get_if<PowerLog>(&v_)) {
    if (!(p->c > 0.0) || !std::isfinite(p->c)) throw ParameterError("phi.c", "must be positive");
  } else {
    const auto& q = std::get<IteratedLog>(v_);
    if (q.N < 1) throw ParameterError("phi.N", "must be a positive integer");
    if (q.N > 3) throw ParameterError("phi.N", "exp_N(2) overflows a double for N > 3");
    if (!(q.alpha > 0.0) || !std::isfinite(q.alpha)) {
      throw ParameterError("phi.alpha", "must be positive");
    }
  }
}

double PhiSpec::log_value_at_lambda(double lambda) const {
  if (const auto* p = std::get_if<PowerLog>(&v_)) return p->c * std::log1p(lambda);
  const auto& q = std::get<IteratedLog>(v_);
  return q.alpha * std::log(iterated_chain(q.N, lambda).psi);
}

double PhiSpec::value_at_lambda(double lambda) const {
  if (const auto* p = std::get_if<PowerLog>(&v_)) return std::pow(1.0 + lambda, p->c);
  const auto& q = std::get<IteratedLog>(v_);
  return std::pow(iterated_chain(q.N, lambda).psi, q.alpha);
}

double PhiSpec::log_slope_at_lambda(double lambda) const {
  if (const auto* p = std::get_if<PowerLog>(&v_)) return p->c / (1.0 + lambda);
  const auto& q = std::get<IteratedLog>(v_);
  return q.alpha / iterated_chain(q.N, lambda).product;
}

double PhiSpec::value(double r) const { return value_at_lambda(lambda_of_radius(r)); }
double PhiSpec::log_value(double r) const { return log_value_at_lambda(lambda_of_radius(r)); }
double PhiSpec::log_slope(double r) const { return log_slope_at_lambda(lambda_of_radius(r)); }

void PhiSpec::validate() const {
  double prev_value = 0.0;
  double prev_slope = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 8 * 64; ++k) {
    const double lambda = k / 8.0;
    const double v = value_at_lambda(lambda);
    const double s = log_slope_at_lambda(lambda);
    if (!(v >= 1.0)) throw ParameterError("phi", "Phi < 1 at lambda = " + std::to_string(lambda));
    if (k > 0 && !(v > prev_value)) {
      throw ParameterError("phi", "Phi not increasing at lambda = " + std::to_string(lambda));
    }
    if (s > prev_slope) {
      throw ParameterError("phi", "h'(r)(1-r) not decreasing at lambda = " + std::to_string(lambda));
    }
    prev_value = v;
    prev_slope = s;
  }
}

std::string PhiSpec::describe() const {
  char buf[96];
  if (const auto* p = std::get_if<PowerLog>(&v_)) {
    std::snprintf(buf, sizeof buf, "PowerLog{c=%.17g}", p->c);
  } else {
    const auto& q = std::get<IteratedLog>(v_);
    std::snprintf(buf, sizeof buf, "IteratedLog{N=%d,alpha=%.17g}", q.N, q.alpha);
  }
  return buf;
}

}  // namespace disclab
