#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace disclab {

using cplx = std::complex<double>;

/// Truncated Taylor series sum_k a_k z^k. Coefficients are always finite and
/// there is at least one of them.
class PowerSeries {
 public:
  PowerSeries();
  explicit PowerSeries(std::vector<cplx> coeffs);

  static PowerSeries constant(cplx c);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  /// a_k, zero beyond the stored degree.
  cplx operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : cplx{};
  }
  /// Horner evaluation.
  cplx operator()(cplx z) const noexcept;
  bool is_constant() const noexcept;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(cplx s);

 private:
  std::vector<cplx> coeffs_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(cplx s, PowerSeries a);

PowerSeries monomial(std::size_t n);
PowerSeries derivative(const PowerSeries& f);
/// Termwise primitive vanishing at 0; truncated at max_degree().
PowerSeries primitive(const PowerSeries& f);
/// g(z) = f(rz).
PowerSeries dilate(const PowerSeries& f, double r);
/// Coefficient convolution truncated at max_degree(). Small products are
/// summed directly with compensation, large ones go through the FFT.
PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g);

/// Largest |a_k - b_k|.
double max_coeff_distance(const PowerSeries& a, const PowerSeries& b);

}  // namespace disclab
