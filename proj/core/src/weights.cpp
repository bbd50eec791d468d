#include "disclab/weights.hpp"

#include <cmath>
#include <limits>

#include "disclab/error.hpp"

namespace disclab {

double phi_log_order(const PhiSpec& phi) {
  if (const auto* p = std::get_if<PowerLog>(&phi.variant())) return p->c;
  const auto& q = std::get<IteratedLog>(phi.variant());
  return q.N == 1 ? q.alpha : 0.0;
}

BernoulliCheck bernoulli_hospital_check(const PhiSpec& phi, double p,
                                        const std::vector<double>& lambdas,
                                        const LogScaleOptions& opt) {
  if (!(p > 2.0)) throw ParameterError("p", "must exceed 2");
  BernoulliCheck out;
  const double order = phi_log_order(phi);
  // for these families Phi/(log e/(1-r))^{p/2-1} -> 0 and m > 1 - p/2 both
  // reduce to order < p/2 - 1
  out.m = -order;
  out.hypotheses_hold = order < p / 2.0 - 1.0;
  out.limit_bound = out.hypotheses_hold ? 1.0 / (out.m + p / 2.0 - 1.0)
                                        : std::numeric_limits<double>::infinity();

  auto density = [&](double u) { return phi.value_at_lambda(u - 1.0) * std::pow(u, -p / 2.0); };
  std::function<double(double)> closed;
  if (const auto* pl = std::get_if<PowerLog>(&phi.variant())) {
    const double e = pl->c - p / 2.0 + 1.0;
    closed = [e](double u) {
      return e < 0.0 ? std::pow(u, e) / -e : std::numeric_limits<double>::infinity();
    };
  }
  for (double lambda : lambdas) {
    if (!(lambda >= 0.0)) throw ParameterError("r_grid", "radii must lie in [0,1)");
    const double u = 1.0 + lambda;
    const LogScaleIntegral lhs = integrate_log_scale(density, u, opt, closed);
    const double rhs = phi.value_at_lambda(lambda) / std::pow(u, p / 2.0 - 1.0);
    out.rows.push_back({-std::expm1(-lambda), lambda, lhs.value, rhs, lhs.value / rhs, lhs.divergent});
  }
  return out;
}

}  // namespace disclab
