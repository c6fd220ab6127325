// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace sdtn::tools {

inline unsigned thread_cap() {
  unsigned cap = 1;
  if (const char* env = std::getenv("SPHERICAL_DTN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) cap = static_cast<unsigned>(v);
  }
  return std::min(cap, std::max(1u, std::thread::hardware_concurrency()));
}

// Runs fn(i) for i in [0, count); results must be written into
// index-addressed storage by the caller so assembly stays deterministic.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned threads = std::min<std::size_t>(thread_cap(), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace sdtn::tools
