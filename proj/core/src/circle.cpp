#include "disclab/circle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <string>

#include "disclab/error.hpp"

namespace disclab {
namespace {

// The FFTW planner is not thread-safe; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place plans kept for the life of the process, one per (length, direction);
// fftw_execute_dft on a finished plan is thread-safe.
fftw_plan cached_plan(std::size_t m, int sign) {
  static std::map<std::pair<std::size_t, int>, fftw_plan> plans;
  std::lock_guard lock(planner_mutex());
  const auto key = std::make_pair(m, sign < 0 ? -1 : 1);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  std::vector<cplx> scratch(m);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(m), buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(key, plan);
  return plan;
}

}  // namespace

bool is_power_of_two(std::size_t m) noexcept { return m != 0 && (m & (m - 1)) == 0; }

std::size_t next_power_of_two(std::size_t m) noexcept {
  std::size_t p = 1;
  while (p < m) p <<= 1;
  return p;
}

std::size_t alias_free_samples(std::size_t degree) noexcept {
  return std::max<std::size_t>(4, next_power_of_two(2 * (degree + 1)));
}

void fft_inplace(std::vector<cplx>& data, int sign) {
  const std::size_t m = data.size();
  if (!is_power_of_two(m)) throw ParameterError("m", "transform length must be a power of two");
  if (m == 1) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(cached_plan(m, sign), buf, buf);
}

std::vector<cplx> evaluate_on_circle(const PowerSeries& f, double r, std::size_t m) {
  if (!(r >= 0.0 && r <= 1.0)) throw ParameterError("r", "radius must lie in [0,1]");
  if (!is_power_of_two(m) || m < 2 * (f.degree() + 1)) {
    throw AliasingError("m = " + std::to_string(m) + " cannot resolve degree " +
                        std::to_string(f.degree()) +
                        "; need a power of two >= " + std::to_string(2 * (f.degree() + 1)));
  }
  std::vector<cplx> v(m);
  const auto& a = f.coeffs();
  double rk = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    v[k] = a[k] * rk;
    rk *= r;
  }
  // f(r w^j) = sum_k a_k r^k w^{jk}, w = e^{2 pi i/m}: a backward transform
  fft_inplace(v, +1);
  return v;
}

}  // namespace disclab
