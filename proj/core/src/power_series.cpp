#include "disclab/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/circle.hpp"
#include "disclab/config.hpp"
#include "disclab/error.hpp"
#include "disclab/summation.hpp"

namespace disclab {

PowerSeries::PowerSeries() : coeffs_{cplx{}} {}

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(cplx{});
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ParameterError("coeffs", "non-finite coefficient");
    }
  }
}

PowerSeries PowerSeries::constant(cplx c) { return PowerSeries(std::vector<cplx>{c}); }

cplx PowerSeries::operator()(cplx z) const noexcept {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

bool PowerSeries::is_constant() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](cplx c) { return c == cplx{}; });
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(cplx s) {
  for (cplx& c : coeffs_) c *= s;
  return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
PowerSeries operator*(cplx s, PowerSeries a) { return a *= s; }

PowerSeries monomial(std::size_t n) {
  if (n > max_degree()) throw DegreeOverflow(n, max_degree());
  std::vector<cplx> c(n + 1);
  c[n] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries derivative(const PowerSeries& f) {
  const auto& a = f.coeffs();
  if (a.size() == 1) return PowerSeries();
  std::vector<cplx> d(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = static_cast<double>(k) * a[k];
  return PowerSeries(std::move(d));
}

PowerSeries primitive(const PowerSeries& f) {
  const auto& a = f.coeffs();
  const std::size_t n = std::min(a.size() + 1, max_degree() + 1);
  std::vector<cplx> p(n);
  for (std::size_t k = 1; k < n; ++k) p[k] = a[k - 1] / static_cast<double>(k);
  return PowerSeries(std::move(p));
}

PowerSeries dilate(const PowerSeries& f, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw ParameterError("r", "dilation radius must lie in [0,1]");
  std::vector<cplx> out = f.coeffs();
  double rk = 1.0;
  for (cplx& c : out) {
    c *= rk;
    rk *= r;
  }
  return PowerSeries(std::move(out));
}

namespace {

// Direct convolution is exact enough and cheap below this many multiply-adds.
constexpr double kDirectProductWork = 1e5;

}  // namespace

PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g) {
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  const std::size_t full = a.size() + b.size() - 2;
  const std::size_t n = std::min(full, max_degree());
  std::vector<cplx> c(n + 1);
  if (static_cast<double>(a.size()) * static_cast<double>(b.size()) <= kDirectProductWork) {
    for (std::size_t k = 0; k <= n; ++k) {
      CompensatedComplexSum s;
      const std::size_t lo = k >= b.size() ? k - (b.size() - 1) : 0;
      const std::size_t hi = std::min(k, a.size() - 1);
      for (std::size_t i = lo; i <= hi; ++i) s += a[i] * b[k - i];
      c[k] = s.value();
    }
    return PowerSeries(std::move(c));
  }
  const std::size_t m = next_power_of_two(full + 1);
  std::vector<cplx> fa(m), fb(m);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  fft_inplace(fa, -1);
  fft_inplace(fb, -1);
  for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  fft_inplace(fa, +1);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k <= n; ++k) c[k] = fa[k] * scale;
  return PowerSeries(std::move(c));
}

double max_coeff_distance(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace disclab
