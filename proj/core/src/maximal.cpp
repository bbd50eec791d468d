#include "disclab/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "disclab/circle.hpp"
#include "disclab/error.hpp"

namespace disclab {

MaximalFunction::MaximalFunction(const std::vector<double>& phi) : m_(phi.size()) {
  if (!is_power_of_two(m_)) throw ParameterError("phi", "sample count must be a power of two");
  prefix_.assign(2 * m_ + 1, 0.0);
  for (std::size_t i = 0; i < 2 * m_; ++i) prefix_[i + 1] = prefix_[i] + std::abs(phi[i % m_]);
}

double MaximalFunction::operator()(cplx z) const {
  const double rho = std::abs(z);
  if (!(rho < 1.0)) throw ParameterError("z", "must lie in the open disc");
  const double md = static_cast<double>(m_);
  double tau = std::arg(z) / (2.0 * std::numbers::pi) * md;
  tau -= md * std::floor(tau / md);
  if (tau >= md) tau = 0.0;

  double best = prefix_[m_] / md;  // the whole circle is always admissible
  const double min_len = md * (1.0 - rho);
  for (std::size_t len = m_ / 2; len >= 1 && static_cast<double>(len) >= min_len; len /= 2) {
    const double l = static_cast<double>(len);
    const long first = static_cast<long>(std::ceil(tau - l));
    const long last = static_cast<long>(std::floor(tau));
    for (long s = first; s <= last; ++s) {
      const std::size_t start = static_cast<std::size_t>((s % static_cast<long>(m_) + static_cast<long>(m_)) %
                                                         static_cast<long>(m_));
      best = std::max(best, (prefix_[start + len] - prefix_[start]) / l);
    }
  }
  return best;
}

double maximal_function(const std::vector<double>& phi, cplx z) { return MaximalFunction(phi)(z); }

}  // namespace disclab
