#pragma once

#include <cstdint>
#include <random>

namespace prefixnet {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent mt19937_64 stream for one trial: seeded with
/// mix64(seed ^ mix64(trial)). Any trial can be replayed on its own.
inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(mix64(seed ^ mix64(trial)));
}

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
/// Used instead of std::uniform_real_distribution, whose output is
/// implementation-defined.
inline double unit_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace prefixnet
