// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace peerrank {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

}  // namespace detail

/// Seed derivation for independent, order-insensitive substreams: the value
/// is the (index+1)-th splitmix64 output from state `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return detail::splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// xoshiro256** seeded through splitmix64. A fixed, self-contained generator
/// so experiment output is bit-identical across platforms and standard
/// library versions (std::* distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += 0x9E3779B97F4A7C15ULL;
      word = detail::splitmix64(sm);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  /// Explicit Bernoulli summation; exact and portable for small trials.
  int binomial(int trials, double p) {
    int successes = 0;
    for (int t = 0; t < trials; ++t) successes += bernoulli(p) ? 1 : 0;
    return successes;
  }

  /// Uniform integer in [0, n). Fixed-point multiply keeps the draw
  /// deterministic with one next_u64 per call.
  std::uint64_t below(std::uint64_t n) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  /// Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Box-Muller from two uniform draws.
  double normal(double mean, double sd) {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * radius * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace peerrank
