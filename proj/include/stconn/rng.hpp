#pragma once

#include <cstdint>

namespace stconn {

// Counter-based SplitMix64 stream: value i is mix(seed + (i + 1) * golden).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double uniform();

  // Independent stream keyed by (seed, stream).
  CounterRng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t z);

}  // namespace stconn
