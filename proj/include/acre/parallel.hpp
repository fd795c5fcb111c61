#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace acre {

/// Number of worker threads used by parallel maps. Zero restores the
/// default (hardware concurrency).
void set_worker_count(unsigned count);
unsigned worker_count();

/// Calls body(i) for i in [0, count). Work is split into contiguous blocks,
/// so results written by index are independent of the worker count.
/// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& f) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace acre
