#pragma once

#include <cstdint>
#include <random>

namespace dmc {

__extension__ using uint128_t = unsigned __int128;

/// Seedable deterministic generator (std::mt19937_64). Not a CSPRNG.
///
/// Draws are defined here rather than through std::uniform_int_distribution
/// so a given seed yields the same stream on every standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Seed from std::random_device.
  static RandomStream from_entropy();

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be > 0.
  /// Lemire's multiply-shift with rejection, so the result is unbiased.
  std::uint64_t uniform_below(std::uint64_t bound) {
    auto product = static_cast<uint128_t>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<uint128_t>(engine_()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform double in [0, 1).
  double uniform_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dmc
