#pragma once

#include <cstdint>
#include <random>

#include "amech/dynamics.hpp"

namespace amech {

/// Seeded generator with a pinned output sequence.
///
/// std::mt19937_64 is fully specified by the standard, but the standard
/// distributions are not, so bounded draws use plain rejection sampling on
/// the raw 64-bit output. Same seed, same numbers, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return r % n;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// n particles with independent uniform positions and velocities, labels 0..n-1.
Configuration random_configuration(std::uint32_t p, std::size_t n, Rng& rng);

/// A k x k block in the top-left corner, one particle per cell, uniform
/// velocities. Particle i sits at (i / k, i mod k).
Configuration random_block(std::uint32_t p, std::uint32_t k, Rng& rng);

}  // namespace amech
