#pragma once

#include <cstdint>
#include <random>

namespace qcournot {

// All randomness in the library flows through an explicitly seeded generator;
// there is no ambient RNG. Draws below avoid std::uniform_*_distribution so
// that sampled sequences are reproducible across standard libraries.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double next_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound) via rejection sampling.
inline std::uint64_t next_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

inline std::size_t next_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(next_below(rng, static_cast<std::uint64_t>(n)));
}

}  // namespace qcournot
