#pragma once

#include <cstddef>
#include <thread>
#include <vector>

#include "cqed/errors.hpp"

namespace cqed::util {

/// steps evenly spaced values covering [lo, hi] inclusive (steps >= 2).
inline std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  if (steps < 2) throw ValidationError("linspace: steps must be >= 2");
  std::vector<double> out(steps);
  const double span = hi - lo;
  for (std::size_t i = 0; i < steps; ++i)
    out[i] = lo + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  out.back() = hi;
  return out;
}

/// Run fn(i) for i in [0, n) across threads, each index evaluated exactly
/// once. Results must be written to per-index slots by the caller, which
/// makes the outcome bit-identical for any thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned threads = 0) {
  if (n == 0) return;
  unsigned hw = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (hw <= 1 || n < 2 * hw) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (n + hw - 1) / hw;
  std::vector<std::thread> pool;
  pool.reserve(hw);
  for (unsigned t = 0; t < hw; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = begin + chunk < n ? begin + chunk : n;
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end]() {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace cqed::util
