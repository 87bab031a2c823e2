#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "toyscatter/instance.hpp"

namespace toyscatter {

enum class Verdict { beats, matched, loses };

std::string_view verdict_name(Verdict v);

/// Outcome of first group against second: p = P(first wins), verdict from
/// an exact comparison of p with 1/2.
struct RelationVerdict {
  Probability p;
  Verdict verdict;
};

/// Throws InvalidInput when either group is empty or holds a non-positive
/// speed.
RelationVerdict relate(const SpeedList& first, const SpeedList& second);

/// Point on the curve where a pair (x, y) is matched with one particle.
struct CurvePoint {
  Rational x;
  Rational y;
};

/// For a single particle of speed s, the partner y with (s + x)(s + y) = 2 s^2,
/// i.e. y = s (s - x) / (s + x). Requires 0 < x < s; throws InvalidInput
/// otherwise.
std::vector<CurvePoint> matching_curve_single_vs_pair(const Rational& speed, std::span<const Rational> xs);

/// x_k = s k / (points + 1) for k = 1..points.
std::vector<Rational> curve_grid(const Rational& speed, std::size_t points);

/// Three groups and their pairwise exact probabilities
/// P(P beats Q), P(Q beats R), P(R beats P).
struct CycleWitness {
  SpeedList p;
  SpeedList q;
  SpeedList r;
  Probability p_pq;
  Probability p_qr;
  Probability p_rp;

  /// All three strictly above 1/2.
  [[nodiscard]] bool is_cycle() const;
};

CycleWitness verify_cycle(const SpeedList& p, const SpeedList& q, const SpeedList& r);

}  // namespace toyscatter
