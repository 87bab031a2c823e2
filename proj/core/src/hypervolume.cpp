#include "toyscatter/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace toyscatter {

namespace {

double weighted_log_sum(std::span<const double> weights, std::span<const double> coords) {
  double s = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * std::log(coords[i]);
  return s;
}

std::uint64_t count_hits(std::span<const double> a, std::span<const double> b, std::uint64_t seed,
                         std::uint64_t begin, std::uint64_t end) {
  const std::size_t m = a.size();
  const std::size_t dims = a.size() + b.size();
  std::vector<double> point(dims);
  std::uint64_t hits = 0;
  for (std::uint64_t s = begin; s < end; ++s) {
    SplitMix64 rng = stream(seed, s);
    for (auto& c : point) c = rng.unit_open_closed();
    const std::span<const double> p(point);
    if (region_contains(a, b, p.first(m), p.subspan(m))) ++hits;
  }
  return hits;
}

}  // namespace

bool VolumeEstimate::agrees_with(const Rational& exact, double sigmas) const {
  return std::abs(estimate - exact.to_double()) <= sigmas * std_error;
}

std::vector<double> draw_point(std::uint64_t seed, std::uint64_t index, std::size_t dims) {
  SplitMix64 rng = stream(seed, index);
  std::vector<double> out(dims);
  for (auto& c : out) c = rng.unit_open_closed();
  return out;
}

bool region_contains(std::span<const double> a, std::span<const double> b, std::span<const double> xs,
                     std::span<const double> ys) {
  return weighted_log_sum(a, xs) < weighted_log_sum(b, ys);
}

std::vector<double> speeds_as_double(std::span<const Rational> speeds) {
  std::vector<double> out;
  out.reserve(speeds.size());
  for (const auto& s : speeds) out.push_back(s.to_double());
  return out;
}

VolumeEstimate estimate_volume(const Instance& inst, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (inst.m() == 0 || inst.n() == 0) throw InvalidInput("volume estimate needs particles on both sides");
  if (samples == 0) throw InvalidInput("samples must be at least 1");

  const auto a = speeds_as_double(inst.a());
  const auto b = speeds_as_double(inst.b());
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(samples, 1024))));

  std::uint64_t hits = 0;
  if (workers == 1) {
    hits = count_hits(a, b, seed, 0, samples);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = samples * w / workers;
        const std::uint64_t end = samples * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] { partial[w] = count_hits(a, b, seed, begin, end); });
      }
    }
    for (auto h : partial) hits += h;
  }

  VolumeEstimate v;
  v.hits = hits;
  v.samples = samples;
  v.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  v.std_error = std::sqrt(v.estimate * (1.0 - v.estimate) / static_cast<double>(samples));
  v.seed = seed;
  return v;
}

}  // namespace toyscatter
