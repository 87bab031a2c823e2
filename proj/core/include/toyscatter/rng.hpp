#pragma once

#include <cstdint>

namespace toyscatter {

/// SplitMix64 (Steele, Lea, Flood 2014). Small, fast, and every output is a
/// pure function of the state, which is what makes per-index streams cheap.
///
/// Reproducibility contract: report values depend on exactly this generator,
/// on stream() below, and on the draw order inside each trial/sample.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform integer in [0, bound) by multiply-shift; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    __extension__ typedef unsigned __int128 u128;
    const auto wide = static_cast<u128>(next()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  /// Uniform double in (0, 1], 53-bit resolution. Never returns 0, so the
  /// logarithm is always finite.
  double unit_open_closed() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Seed for sub-stream `index` of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed ^ SplitMix64::mix(index + SplitMix64::kGolden));
}

/// Independent generator for trial or sample `index`.
inline SplitMix64 stream(std::uint64_t seed, std::uint64_t index) { return SplitMix64(derive_seed(seed, index)); }

}  // namespace toyscatter
