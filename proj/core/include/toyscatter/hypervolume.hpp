#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toyscatter/instance.hpp"
#include "toyscatter/rng.hpp"

namespace toyscatter {

// P(A wins) equals the volume of the part of the unit hypercube where
//   x_1^a_1 ... x_m^a_m < y_1^b_1 ... y_n^b_n.
// The estimator samples that cube and tests the inequality in log space.
// Ties have measure zero and count as misses.

struct VolumeEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;

  [[nodiscard]] bool agrees_with(const Rational& exact, double sigmas = 4.0) const;

  friend bool operator==(const VolumeEstimate&, const VolumeEstimate&) = default;
};

/// Coordinates of sample `index`: m x-values followed by n y-values, each
/// uniform in (0, 1], drawn from stream(seed, index).
std::vector<double> draw_point(std::uint64_t seed, std::uint64_t index, std::size_t dims);

/// sum a_i ln x_i < sum b_j ln y_j.
bool region_contains(std::span<const double> a, std::span<const double> b, std::span<const double> xs,
                     std::span<const double> ys);

/// Hit fraction over `samples` points. Throws InvalidInput when a side is
/// empty or samples is zero. `threads` does not affect the result.
VolumeEstimate estimate_volume(const Instance& inst, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

/// Speeds as doubles, in instance order.
std::vector<double> speeds_as_double(std::span<const Rational> speeds);

}  // namespace toyscatter
