#pragma once

#include <cstddef>

namespace disclab {

inline constexpr std::size_t kDefaultMaxDegree = std::size_t{1} << 16;

/// Global truncation degree for constructors and products.
std::size_t max_degree() noexcept;
void set_max_degree(std::size_t degree);

/// Restores the previous max degree on scope exit.
class ScopedMaxDegree {
 public:
  explicit ScopedMaxDegree(std::size_t degree);
  ~ScopedMaxDegree();
  ScopedMaxDegree(const ScopedMaxDegree&) = delete;
  ScopedMaxDegree& operator=(const ScopedMaxDegree&) = delete;

 private:
  std::size_t previous_;
};

/// Worker count used by inner parallel loops. Results never depend on it.
unsigned thread_count() noexcept;
void set_thread_count(unsigned n);

}  // namespace disclab
