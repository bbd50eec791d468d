#include "disclab/config.hpp"

#include <atomic>
#include <thread>

#include "disclab/error.hpp"

namespace disclab {
namespace {

std::atomic<std::size_t> g_max_degree{kDefaultMaxDegree};

unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<unsigned> g_threads{default_threads()};

}  // namespace

std::size_t max_degree() noexcept { return g_max_degree.load(std::memory_order_relaxed); }

void set_max_degree(std::size_t degree) {
  if (degree == 0) throw ParameterError("max_degree", "must be positive");
  g_max_degree.store(degree, std::memory_order_relaxed);
}

ScopedMaxDegree::ScopedMaxDegree(std::size_t degree) : previous_(max_degree()) {
  set_max_degree(degree);
}

ScopedMaxDegree::~ScopedMaxDegree() { g_max_degree.store(previous_, std::memory_order_relaxed); }

unsigned thread_count() noexcept { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? default_threads() : n); }

}  // namespace disclab
