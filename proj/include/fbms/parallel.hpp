#pragma once
#include <cstddef>
#include <cstdlib>
#include <span>
#include <thread>
#include <vector>

namespace fbms {

// Worker count: FBMS_THREADS env var, else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("FBMS_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Runs f(i) for i in [0, n). Each index is visited exactly once, so a body
// that only writes slot i of preallocated output is deterministic for any
// worker count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  unsigned workers = thread_count();
  if (workers <= 1 || n < 2048) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &f] {
      for (std::size_t i = lo; i < hi; ++i) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Pairwise-tree sum. The association depends only on the array length,
// never on the worker count, so totals are bit-stable.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace fbms
