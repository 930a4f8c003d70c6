#pragma once

#include <cstdint>

namespace fvs {

// SplitMix64. The whole toolkit draws randomness from this one generator so
// that instances and solver runs can be reproduced bit-for-bit from a seed in
// any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// uniform(bound) = floor(next() * bound / 2^64), bernoulli(p) compares the top
// 53 bits of next() scaled to [0,1) against p, coin() is the top bit.
class SplitMix64 {
 public:
  __extension__ typedef unsigned __int128 u128;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  std::uint64_t uniform(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
  }

  bool coin() noexcept { return (next() >> 63) != 0; }

  bool bernoulli(double p) noexcept {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Independent child stream key: mix(parent + (tag + 1) * golden).
constexpr std::uint64_t substream(std::uint64_t parent, std::uint64_t tag) noexcept {
  return SplitMix64::mix(parent + (tag + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace fvs
