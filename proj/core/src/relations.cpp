#include "toyscatter/relations.hpp"

#include "toyscatter/recursive.hpp"

namespace toyscatter {

namespace {

const Rational kHalf(BigInt(1), BigInt(2));

Probability win_probability(const SpeedList& first, const SpeedList& second) {
  if (first.empty() || second.empty()) throw InvalidInput("relations need non-empty groups");
  return p_a_wins_recursive(Instance(first, second));
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::beats: return "beats";
    case Verdict::matched: return "matched";
    case Verdict::loses: return "loses";
  }
  return "unknown";
}

RelationVerdict relate(const SpeedList& first, const SpeedList& second) {
  Probability p = win_probability(first, second);
  const auto c = p.value() <=> kHalf;
  const Verdict v = c > 0 ? Verdict::beats : (c == 0 ? Verdict::matched : Verdict::loses);
  return {std::move(p), v};
}

std::vector<CurvePoint> matching_curve_single_vs_pair(const Rational& speed, std::span<const Rational> xs) {
  if (speed.sign() <= 0) throw InvalidInput("single-particle speed must be positive");
  std::vector<CurvePoint> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if (x.sign() <= 0 || x >= speed) {
      throw InvalidInput("curve abscissa " + x.str() + " must lie strictly between 0 and " + speed.str());
    }
    out.push_back({x, speed * (speed - x) / (speed + x)});
  }
  return out;
}

std::vector<Rational> curve_grid(const Rational& speed, std::size_t points) {
  std::vector<Rational> xs;
  xs.reserve(points);
  const Rational step = speed / Rational(static_cast<long>(points + 1));
  for (std::size_t k = 1; k <= points; ++k) xs.push_back(step * Rational(static_cast<long>(k)));
  return xs;
}

bool CycleWitness::is_cycle() const {
  return p_pq.value() > kHalf && p_qr.value() > kHalf && p_rp.value() > kHalf;
}

CycleWitness verify_cycle(const SpeedList& p, const SpeedList& q, const SpeedList& r) {
  return {p, q, r, win_probability(p, q), win_probability(q, r), win_probability(r, p)};
}

}  // namespace toyscatter
