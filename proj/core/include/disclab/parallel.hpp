#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "disclab/config.hpp"

namespace disclab {

/// Runs body(i) for i in [0, n) on thread_count() workers. Each index is
/// handled exactly once; callers write only to slot i, so results do not
/// depend on scheduling. The first exception thrown is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      // strided split keeps neighbouring (similar cost) items on different workers
      for (std::size_t i = w; i < n; i += workers) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<std::optional<T>> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Produces items in parallel batches and hands them to consume() strictly
/// in index order; memory stays bounded by the batch size.
template <class T, class Produce, class Consume>
void parallel_ordered(std::size_t n, Produce&& produce, Consume&& consume) {
  const std::size_t batch = std::max<std::size_t>(1, 2 * thread_count());
  for (std::size_t start = 0; start < n; start += batch) {
    const std::size_t count = std::min(batch, n - start);
    auto items = parallel_map<T>(count, [&](std::size_t i) { return produce(start + i); });
    for (std::size_t i = 0; i < count; ++i) consume(start + i, std::move(items[i]));
  }
}

}  // namespace disclab
