#pragma once

#include <cmath>
#include <cstdint>

namespace relaynet {

// Cross-platform reproducible random source (splitmix64).
//
// All randomness in the library flows through this type so that results are
// bit-identical across platforms and thread counts.  Parallel work derives
// one substream per item (symbol, trial, restart, ...) with substream(i);
// substreams are indexed off the generator's current state, so derive them
// before consuming draws.  Gaussian variates use Box-Muller on exactly two
// 64-bit words per draw (no cached second value, no rejection loop).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal.
  double gaussian() {
    // u1 in (0, 1] keeps the log finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Independent stream for item `index`, derived from the current state.
  Rng substream(std::uint64_t index) const {
    return Rng(mix(state_ + 0x9E3779B97F4A7C15ULL * (index + 1)));
  }

  std::uint64_t state() const { return state_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace relaynet
