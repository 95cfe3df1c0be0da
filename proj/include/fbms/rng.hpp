#pragma once
#include <cstdint>
#include <random>

namespace fbms {

// splitmix64; used to derive independent per-sample seeds from
// (master seed, sample counter) so sweeps are reproducible for any
// thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 sample_rng(std::uint64_t master_seed, std::uint64_t counter) {
  return std::mt19937_64(splitmix64(master_seed ^ splitmix64(counter)));
}

}  // namespace fbms
