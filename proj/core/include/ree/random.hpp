#pragma once

// Portable seeded generator. std distributions are implementation-defined,
// so samples are drawn from raw 64-bit output to keep results identical
// across standard libraries.

#include <cmath>
#include <cstdint>

namespace ree {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Child seed for stream `index`, independent of draw order.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return mixer();
  }

 private:
  std::uint64_t state_;
};

}  // namespace ree
