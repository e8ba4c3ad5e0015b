#pragma once

#include <cstdint>

namespace relana {

// SplitMix64 (Vigna). The exact constants are part of the file-format contract:
// seeded generators must reproduce identical bits across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // true with probability num/den, consuming one draw
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    return next() % den < num;
  }

 private:
  std::uint64_t state_;
};

}  // namespace relana
