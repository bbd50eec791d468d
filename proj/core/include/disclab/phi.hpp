#pragma once

#include <string>
#include <variant>

namespace disclab {

/// Phi(r) = (log e/(1-r))^c.
struct PowerLog {
  double c;
};

/// Phi(r) = (log_N(exp_N(2)/(1-r)))^alpha.
struct IteratedLog {
  int N;
  double alpha;
};

/// Increasing weight Phi on [0,1). Everything is parametrized by
/// lambda = log(1/(1-r)) so that radii within 2^-53 of the boundary stay
/// representable; the r-overloads convert with log1p.
class PhiSpec {
 public:
  using Variant = std::variant<PowerLog, IteratedLog>;

  explicit PhiSpec(Variant v);
  static PhiSpec power_log(double c) { return PhiSpec(PowerLog{c}); }
  static PhiSpec iterated_log(int n, double alpha) { return PhiSpec(IteratedLog{n, alpha}); }

  const Variant& variant() const noexcept { return v_; }

  double value_at_lambda(double lambda) const;
  /// h = log Phi.
  double log_value_at_lambda(double lambda) const;
  /// dh/dlambda, which equals h'(r)(1-r).
  double log_slope_at_lambda(double lambda) const;

  double value(double r) const;
  double log_value(double r) const;
  double log_slope(double r) const;

  /// Checks Phi >= 1, Phi increasing and h'(r)(1-r) nonincreasing on a grid
  /// lambda = k/8, k = 0..8*64. Throws ParameterError("phi", ...) on failure.
  void validate() const;

  std::string describe() const;

 private:
  Variant v_;
};

/// lambda = log(1/(1-r)).
double lambda_of_radius(double r);

}  // namespace disclab
