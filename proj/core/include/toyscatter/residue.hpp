#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "toyscatter/instance.hpp"

namespace toyscatter {

// P(A wins) is minus the sum of residues at the a-poles of
//
//   Phi(w) = (1/w) * prod_i (1 - a_i w)^(-x_i) * prod_j (1 + b_j w)^(-y_j)
//
// where x_i, y_j are multiplicities. Everything stays in the rational field.

/// One factor (c0 + c1 w)^(-exponent) of Phi, with c1 != 0.
struct LinearFactor {
  Rational c0;
  Rational c1;
  std::size_t exponent = 1;

  /// Zero of the factor, -c0/c1.
  [[nodiscard]] Rational pole() const { return -c0 / c1; }
};

enum class PoleKind { origin, a_pole, b_pole };

/// Phi(w) for a grouped instance, as a product of linear factors.
/// Factor 0 is the origin; a-groups and b-groups follow in group order.
class RationalFunctionSpec {
 public:
  explicit RationalFunctionSpec(const GroupedInstance& g);

  [[nodiscard]] const std::vector<LinearFactor>& factors() const { return factors_; }
  [[nodiscard]] std::size_t a_pole_count() const { return a_count_; }
  [[nodiscard]] std::size_t b_pole_count() const { return factors_.size() - 1 - a_count_; }
  [[nodiscard]] PoleKind kind(std::size_t factor_index) const;

  /// Exact residue of Phi at the zero of factor `factor_index`, for any pole
  /// order: expands the remaining factors as a truncated series around the
  /// pole and reads off the coefficient matching the pole order.
  [[nodiscard]] Rational residue(std::size_t factor_index) const;

 private:
  std::vector<LinearFactor> factors_;
  std::size_t a_count_ = 0;
};

struct AllResidues {
  std::vector<Rational> a_poles;
  std::vector<Rational> b_poles;
  Rational origin;

  /// Sum over every pole; zero for any valid instance.
  [[nodiscard]] Rational total() const;
};

AllResidues all_residues(const GroupedInstance& g);

enum class Method { recursive, distinct, series, all_equal, per_type_equal, epsilon };

std::string_view method_name(Method m);

struct MethodReport {
  Probability value;
  Method method;
  /// Residue at each a-pole (each perturbed a-pole for the epsilon method).
  /// `value` equals minus their sum.
  std::vector<Rational> residues;
  /// Perturbation used, for the epsilon method only.
  std::optional<Rational> epsilon;
};

/// Simple-pole residue sum; requires pairwise distinct a-speeds (throws
/// InvalidInput otherwise). B speeds may repeat.
MethodReport p_a_wins_distinct(const Instance& inst);

/// Exact residue sum for arbitrary multiplicities.
MethodReport p_a_wins_series(const GroupedInstance& g);

/// m particles of speed 1 against n of speed 1:
/// sum_{i<m} C(n+i-1, i) 2^(-n-i). Requires m, n >= 1.
Probability s_equal_speed(std::size_t m, std::size_t n);

/// m particles of speed 1 against n of speed v:
/// sum_{i<m} C(n+i-1, i) v^i (1+v)^(-n-i). Requires m, n >= 1, v > 0.
Probability s_two_speeds(std::size_t m, std::size_t n, const Rational& v);

/// Closed form for one speed per side, reduced to s_two_speeds by scaling
/// the A speed to 1. Reports all_equal when both speeds agree,
/// per_type_equal otherwise. Throws InvalidInput on other shapes.
MethodReport p_a_wins_closed_form(const GroupedInstance& g);

/// True when p_a_wins_closed_form applies.
bool closed_form_applicable(const GroupedInstance& g);

/// Splits every group: the q-th copy of speed s becomes s + q*eps
/// (q = 1..multiplicity) on both sides. Throws InvalidInput if eps <= 0 or
/// two perturbed speeds on one side coincide.
Instance perturb(const GroupedInstance& g, const Rational& eps);

/// Distinct-pole value of the perturbed instance; an approximation that
/// tends to the exact value as eps -> 0.
MethodReport p_a_wins_epsilon(const GroupedInstance& g, const Rational& eps);

/// gap / (1000 (N + 1)), where gap is the smallest difference between
/// distinct members of {a_i} U {b_j} U {a_i + b_j} (or the lone value when
/// only one exists) and N the particle count.
Rational default_epsilon(const GroupedInstance& g);

}  // namespace toyscatter
