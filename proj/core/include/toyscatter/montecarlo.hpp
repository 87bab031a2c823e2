#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "toyscatter/instance.hpp"
#include "toyscatter/rng.hpp"

namespace toyscatter {

enum class Side { A, B };

/// Which opposite-type pair collides next.
///   frontmost       - the last remaining A against the first remaining B,
///                     i.e. the pair at the interface of the two beams.
///   random_adjacent - a uniformly chosen surviving A against a uniformly
///                     chosen surviving B.
enum class Policy { frontmost, random_adjacent };

std::string_view policy_name(Policy p);
/// Accepts "frontmost" and "random-adjacent"; throws InvalidInput.
Policy parse_policy(std::string_view text);

/// floor(2^64 * a / (a + b)): a uniform 64-bit draw below this value means A
/// survives. Exact in the rationals; the only approximation is the 2^-64
/// quantum of the draw itself.
std::uint64_t survival_threshold(const Rational& a, const Rational& b);

/// Resolves one collision between A of speed a and B of speed b.
Side collide(const Rational& a, const Rational& b, SplitMix64& rng);

/// Survival thresholds for every (A, B) pair of an instance.
class CollisionTable {
 public:
  explicit CollisionTable(const Instance& inst);

  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::uint64_t threshold(std::size_t i, std::size_t j) const { return thresholds_[i * n_ + j]; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::uint64_t> thresholds_;
};

struct TrialOutcome {
  Side winner;
  std::size_t collisions;
  std::size_t survivors;
};

/// Plays one annihilation sequence to completion.
TrialOutcome run_trial(const CollisionTable& table, Policy policy, SplitMix64& rng);

struct SimConfig {
  std::uint64_t trials = 200000;
  std::uint64_t seed = 1;
  Policy policy = Policy::frontmost;
  /// Worker threads. Results do not depend on this value.
  unsigned threads = 1;
};

struct SimReport {
  std::uint64_t a_wins = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  Policy policy = Policy::frontmost;

  [[nodiscard]] std::uint64_t b_wins() const { return trials - a_wins; }
  /// |estimate - exact| <= sigmas * std_error.
  [[nodiscard]] bool agrees_with(const Rational& exact, double sigmas = 4.0) const;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Trial t uses stream(cfg.seed, t), so any split of trials across threads
/// gives the same counts as a serial run. Throws InvalidInput when a side is
/// empty or trials is zero.
SimReport simulate(const Instance& inst, const SimConfig& cfg);

/// Simulates `permutations` reorderings of the instance (the first is the
/// given order, the rest are shuffles from stream(cfg.seed, k)). Run k uses
/// seed derive_seed(cfg.seed, k).
std::vector<SimReport> order_invariance_probe(const Instance& inst, const SimConfig& cfg, std::size_t permutations);

/// Fisher-Yates shuffle of both sides driven by `rng`.
Instance shuffled(const Instance& inst, SplitMix64& rng);

}  // namespace toyscatter
