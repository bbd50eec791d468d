#pragma once

#include <vector>

#include "disclab/phi.hpp"
#include "disclab/quadrature.hpp"

namespace disclab {

/// lim h'(r)(1-r) log(e/(1-r)) as r -> 1: c for PowerLog, alpha for
/// IteratedLog with N = 1, 0 for N >= 2.
double phi_log_order(const PhiSpec& phi);

struct BernoulliRow {
  double r;
  double lambda;  // log(1/(1-r))
  double lhs;
  double rhs;
  double ratio;
  bool divergent;
};

struct BernoulliCheck {
  std::vector<BernoulliRow> rows;
  /// The hypotheses of the lemma: Phi / (log e/(1-r))^{p/2-1} -> 0 and
  /// m = -liminf h'(r)(1-r) log(e/(1-r)) > 1 - p/2.
  bool hypotheses_hold;
  double m;
  /// 1/(m + p/2 - 1) when the hypotheses hold.
  double limit_bound;
};

/// lhs = int_r^1 Phi(s) ds / ((1-s)(log e/(1-s))^{p/2}),
/// rhs = Phi(r) / (log e/(1-r))^{p/2-1}, on radii given by their lambda.
/// Throws ParameterError unless p > 2.
BernoulliCheck bernoulli_hospital_check(const PhiSpec& phi, double p,
                                        const std::vector<double>& lambdas,
                                        const LogScaleOptions& opt = {});

}  // namespace disclab
