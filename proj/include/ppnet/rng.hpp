#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace ppnet {

// Derived seed for stream `stream` of a master seed: the (stream+1)-th output
// of SplitMix64 seeded with `master`. Constant time, so parallel consumers can
// derive their streams independently of execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic, cross-platform 64-bit generator (xoshiro256**, seeded via
/// SplitMix64). All sampling distributions are implemented on top of the raw
/// stream so results are identical on every platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      word = z ^ (z >> 31);
    }
  }

  static Rng for_stream(std::uint64_t master, std::uint64_t stream) {
    return Rng(derive_seed(master, stream));
  }

  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform index in [0, n).
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n));
  }

  // Unit-rate exponential.
  double exponential() { return -std::log1p(-uniform01()); }

  // Exact Poisson draw via products of uniforms; large means are split using
  // the superposition property to keep exp(-mean) away from underflow.
  std::uint64_t poisson(double mean) {
    std::uint64_t n = 0;
    while (mean > 256.0) {
      n += poisson_small(256.0);
      mean -= 256.0;
    }
    return n + poisson_small(mean);
  }

 private:
  std::uint64_t poisson_small(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = uniform01();
    while (prod >= limit) {
      ++k;
      prod *= uniform01();
    }
    return k;
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace ppnet
