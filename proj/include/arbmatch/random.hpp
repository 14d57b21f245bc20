#pragma once

#include <cstdint>
#include <random>

namespace arbmatch {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used as a counter-based generator so that a
// (seed, counter) pair always yields the same bits regardless of which
// worker or level evaluates it.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent child seed from a master seed and a counter.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(splitmix64(seed) ^ splitmix64(counter + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return split_seed(split_seed(seed, a), b);
}

/// Maps 64 random bits to a double in [0, 1) using the top 53 bits.
constexpr double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace arbmatch
