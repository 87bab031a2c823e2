#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toyscatter/rational.hpp"

namespace toyscatter {

using SpeedList = std::vector<Rational>;

/// Exact probability; construction enforces 0 <= value <= 1.
class Probability {
 public:
  explicit Probability(Rational value);

  [[nodiscard]] const Rational& value() const { return value_; }
  [[nodiscard]] Probability complement() const { return Probability(Rational(1) - value_); }

  friend bool operator==(const Probability&, const Probability&) = default;
  friend auto operator<=>(const Probability& a, const Probability& b) { return a.value_ <=> b.value_; }

 private:
  Rational value_;
};

/// Two beams of particles: type A moving right with speeds a, type B moving
/// left with speeds b. Either side may be empty, but not both.
class Instance {
 public:
  /// Throws InvalidInput on a non-positive speed or when both sides are empty.
  Instance(SpeedList a, SpeedList b);

  [[nodiscard]] const SpeedList& a() const { return a_; }
  [[nodiscard]] const SpeedList& b() const { return b_; }
  [[nodiscard]] std::size_t m() const { return a_.size(); }
  [[nodiscard]] std::size_t n() const { return b_.size(); }
  [[nodiscard]] std::size_t particle_count() const { return a_.size() + b_.size(); }

  /// Same particles with the roles of A and B exchanged.
  [[nodiscard]] Instance swapped() const { return Instance(b_, a_); }
  /// Every speed multiplied by `factor` (> 0).
  [[nodiscard]] Instance scaled(const Rational& factor) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  SpeedList a_;
  SpeedList b_;
};

struct SpeedGroup {
  Rational speed;
  std::size_t multiplicity = 1;

  friend bool operator==(const SpeedGroup&, const SpeedGroup&) = default;
};

using GroupList = std::vector<SpeedGroup>;

/// Distinct speeds per side with multiplicities; the repeated-pole form of
/// an Instance.
class GroupedInstance {
 public:
  /// Throws InvalidInput when a side repeats a speed, a multiplicity is zero,
  /// or the expansion would not be a valid Instance.
  GroupedInstance(GroupList a_groups, GroupList b_groups);

  [[nodiscard]] const GroupList& a_groups() const { return a_groups_; }
  [[nodiscard]] const GroupList& b_groups() const { return b_groups_; }
  [[nodiscard]] std::size_t particle_count() const;
  [[nodiscard]] GroupedInstance swapped() const { return GroupedInstance(b_groups_, a_groups_); }

  /// Repeats every speed by its multiplicity, in group order.
  [[nodiscard]] Instance expand() const;

  friend bool operator==(const GroupedInstance&, const GroupedInstance&) = default;

 private:
  GroupList a_groups_;
  GroupList b_groups_;
};

/// Merges equal speeds; groups come out sorted ascending by speed.
GroupedInstance group(const Instance& inst);

/// Permutation-invariant identity of an instance: equal iff both sides are
/// equal as multisets.
class CanonicalKey {
 public:
  explicit CanonicalKey(std::string text) : text_(std::move(text)) {}
  [[nodiscard]] const std::string& str() const { return text_; }
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string text_;
};

CanonicalKey canonical_key(const Instance& inst);

/// Parses {"a": [...], "b": [...]} where each speed is a JSON integer, a JSON
/// number, or a string "30" / "3/7" / "0.9". Throws InvalidInput.
Instance parse_instance(std::string_view json_text);

/// Parses a comma-separated speed list such as "30,20" or "1/3, 0.5". An
/// empty or all-blank string yields an empty list.
SpeedList parse_speed_list(std::string_view text);

/// Throws InvalidInput unless every speed is strictly positive.
void require_positive(std::span<const Rational> speeds, std::string_view side);

}  // namespace toyscatter
