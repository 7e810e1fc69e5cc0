#pragma once

#include <cstdint>
#include <random>

namespace fairrank::rng {

// All randomness flows through std::mt19937_64 (its output sequence is fully
// specified by the standard) plus the hand-rolled mappings below, so runs are
// byte-identical across platforms. std::uniform_*_distribution is
// implementation-defined and must not be used here.

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Unbiased index in [0, n) by rejection.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % n;
}

// splitmix64 finalizer; derives per-item seeds from a run seed.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t item) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (item + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace fairrank::rng
