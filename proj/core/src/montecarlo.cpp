#include "toyscatter/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace toyscatter {

namespace {

template <typename T>
void shuffle_in_place(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

TrialOutcome frontmost_trial(const CollisionTable& table, SplitMix64& rng) {
  // A's front is its last particle, B's front its first.
  std::size_t a_alive = table.m();
  std::size_t b_next = 0;
  std::size_t collisions = 0;
  while (a_alive > 0 && b_next < table.n()) {
    ++collisions;
    if (rng.next() < table.threshold(a_alive - 1, b_next)) {
      ++b_next;
    } else {
      --a_alive;
    }
  }
  if (a_alive > 0) return {Side::A, collisions, a_alive};
  return {Side::B, collisions, table.n() - b_next};
}

TrialOutcome random_pair_trial(const CollisionTable& table, SplitMix64& rng) {
  std::vector<std::size_t> a_alive(table.m());
  std::vector<std::size_t> b_alive(table.n());
  for (std::size_t i = 0; i < a_alive.size(); ++i) a_alive[i] = i;
  for (std::size_t j = 0; j < b_alive.size(); ++j) b_alive[j] = j;
  std::size_t collisions = 0;
  while (!a_alive.empty() && !b_alive.empty()) {
    ++collisions;
    const auto ia = static_cast<std::size_t>(rng.below(a_alive.size()));
    const auto ib = static_cast<std::size_t>(rng.below(b_alive.size()));
    auto& loser_side = rng.next() < table.threshold(a_alive[ia], b_alive[ib]) ? b_alive : a_alive;
    const std::size_t loser = &loser_side == &b_alive ? ib : ia;
    loser_side[loser] = loser_side.back();
    loser_side.pop_back();
  }
  if (!a_alive.empty()) return {Side::A, collisions, a_alive.size()};
  return {Side::B, collisions, b_alive.size()};
}

std::uint64_t count_a_wins(const CollisionTable& table, const SimConfig& cfg, std::uint64_t begin,
                           std::uint64_t end) {
  std::uint64_t wins = 0;
  for (std::uint64_t t = begin; t < end; ++t) {
    SplitMix64 rng = stream(cfg.seed, t);
    if (run_trial(table, cfg.policy, rng).winner == Side::A) ++wins;
  }
  return wins;
}

}  // namespace

std::string_view policy_name(Policy p) {
  return p == Policy::frontmost ? "frontmost" : "random-adjacent";
}

Policy parse_policy(std::string_view text) {
  if (text == "frontmost") return Policy::frontmost;
  if (text == "random-adjacent") return Policy::random_adjacent;
  throw InvalidInput("unknown policy '" + std::string(text) + "' (expected frontmost or random-adjacent)");
}

std::uint64_t survival_threshold(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw InvalidInput("collision speeds must be positive");
  return scaled_threshold_u64(a / (a + b));
}

Side collide(const Rational& a, const Rational& b, SplitMix64& rng) {
  return rng.next() < survival_threshold(a, b) ? Side::A : Side::B;
}

CollisionTable::CollisionTable(const Instance& inst) : m_(inst.m()), n_(inst.n()), thresholds_(m_ * n_) {
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) thresholds_[i * n_ + j] = survival_threshold(inst.a()[i], inst.b()[j]);
  }
}

TrialOutcome run_trial(const CollisionTable& table, Policy policy, SplitMix64& rng) {
  return policy == Policy::frontmost ? frontmost_trial(table, rng) : random_pair_trial(table, rng);
}

bool SimReport::agrees_with(const Rational& exact, double sigmas) const {
  return std::abs(estimate - exact.to_double()) <= sigmas * std_error;
}

SimReport simulate(const Instance& inst, const SimConfig& cfg) {
  if (inst.m() == 0 || inst.n() == 0) throw InvalidInput("simulation needs particles on both sides");
  if (cfg.trials == 0) throw InvalidInput("trials must be at least 1");

  const CollisionTable table(inst);
  const unsigned workers = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::min<std::uint64_t>(cfg.trials, 1024))));

  std::uint64_t a_wins = 0;
  if (workers == 1) {
    a_wins = count_a_wins(table, cfg, 0, cfg.trials);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = cfg.trials * w / workers;
      const std::uint64_t end = cfg.trials * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { partial[w] = count_a_wins(table, cfg, begin, end); });
    }
    pool.clear();
    for (auto c : partial) a_wins += c;
  }

  SimReport r;
  r.a_wins = a_wins;
  r.trials = cfg.trials;
  r.estimate = static_cast<double>(a_wins) / static_cast<double>(cfg.trials);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(cfg.trials));
  r.seed = cfg.seed;
  r.policy = cfg.policy;
  return r;
}

Instance shuffled(const Instance& inst, SplitMix64& rng) {
  SpeedList a = inst.a();
  SpeedList b = inst.b();
  shuffle_in_place(a, rng);
  shuffle_in_place(b, rng);
  return Instance(std::move(a), std::move(b));
}

std::vector<SimReport> order_invariance_probe(const Instance& inst, const SimConfig& cfg, std::size_t permutations) {
  std::vector<SimReport> out;
  out.reserve(permutations);
  for (std::size_t k = 0; k < permutations; ++k) {
    SimConfig run = cfg;
    run.seed = derive_seed(cfg.seed, k);
    if (k == 0) {
      out.push_back(simulate(inst, run));
    } else {
      SplitMix64 rng = stream(cfg.seed, k);
      out.push_back(simulate(shuffled(inst, rng), run));
    }
  }
  return out;
}

}  // namespace toyscatter
