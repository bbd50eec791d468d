#pragma once

#include <vector>

#include "disclab/power_series.hpp"

namespace disclab {

/// M(phi)(z) = sup over arcs I with z in S(I) of the mean of |phi| on I.
/// phi holds m samples at angles 2 pi j/m (m a power of two); sample j
/// stands for the cell [j, j+1) in sample units. Arcs have dyadic lengths
/// L = m 2^-k >= 1 samples with 2^-k >= 1-|z|, start at any sample and must
/// contain the angle of z in their closure.
double maximal_function(const std::vector<double>& phi, cplx z);

/// Prefix-sum table reused across many points.
class MaximalFunction {
 public:
  explicit MaximalFunction(const std::vector<double>& phi);
  double operator()(cplx z) const;
  std::size_t samples() const noexcept { return m_; }

 private:
  std::size_t m_;
  std::vector<double> prefix_;  // prefix over two periods
};

}  // namespace disclab
