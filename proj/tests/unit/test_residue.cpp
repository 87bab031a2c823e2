#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toyscatter/recursive.hpp"
#include "toyscatter/residue.hpp"

namespace toyscatter {
namespace {

using testing::r;

Rational exact(const Instance& inst) { return p_a_wins_recursive(inst).value(); }

Rational sum_negated(const std::vector<Rational>& xs) {
  Rational s(0);
  for (const auto& x : xs) s -= x;
  return s;
}

TEST(Distinct, KnownValues) {
  const auto rep = p_a_wins_distinct(Instance({r(2), r(1)}, {r(1)}));
  EXPECT_EQ(rep.value.value(), r(5, 6));
  EXPECT_EQ(rep.method, Method::distinct);
  // Per-pole terms: 2/(2-1) * 2/3 and 1/(1-2) * 1/2, negated as residues.
  EXPECT_EQ(rep.residues, (std::vector<Rational>{r(-4, 3), r(1, 2)}));

  EXPECT_EQ(p_a_wins_distinct(Instance({r(60)}, {r(20), r(30)})).value.value(), r(1, 2));
  EXPECT_EQ(p_a_wins_distinct(Instance({r(30), r(20)}, {r(15), r(36)})).value.value(), r(270, 539));
}

TEST(Distinct, RejectsRepeatedASpeeds) {
  EXPECT_THROW(p_a_wins_distinct(Instance({r(1), r(1)}, {r(2)})), InvalidInput);
  EXPECT_NO_THROW(p_a_wins_distinct(Instance({r(1), r(3)}, {r(2), r(2)})));
}

TEST(Distinct, EmptySides) {
  EXPECT_EQ(p_a_wins_distinct(Instance({r(4)}, {})).value.value(), r(1));
  EXPECT_EQ(p_a_wins_distinct(Instance({}, {r(4)})).value.value(), r(0));
}

TEST(Distinct, EqualsRecursiveOnRandomDistinctInstances) {
  testing::InstanceGenerator gen(31);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = gen.distinct_instance(8, 8);
    const auto rep = p_a_wins_distinct(inst);
    EXPECT_EQ(rep.value.value(), exact(inst));
    EXPECT_EQ(sum_negated(rep.residues), rep.value.value());
  }
}

TEST(SeriesResidue, KnownValues) {
  EXPECT_EQ(p_a_wins_series(GroupedInstance({{r(1), 2}}, {{r(1), 2}})).value.value(), r(1, 2));
  EXPECT_EQ(p_a_wins_series(GroupedInstance({{r(1), 2}}, {{r(1), 1}})).value.value(), r(3, 4));
  // Brute-force expansion of a=[2,2,3], b=[5] gives 267/392.
  const GroupedInstance g({{r(2), 2}, {r(3), 1}}, {{r(5), 1}});
  EXPECT_EQ(p_a_wins_series(g).value.value(), r(267, 392));
  EXPECT_EQ(p_a_wins_series(g).value.value(), exact(g.expand()));
}

TEST(SeriesResidue, EqualsRecursiveWithMultiplicities) {
  testing::InstanceGenerator gen(32);
  for (int i = 0; i < 200; ++i) {
    const std::size_t total = gen.count(2, 10);
    const std::size_t m = gen.count(1, total - 1);
    const Instance inst(gen.speeds_with_repeats(m), gen.speeds_with_repeats(total - m));
    const auto rep = p_a_wins_series(group(inst));
    EXPECT_EQ(rep.value.value(), exact(inst));
    EXPECT_EQ(rep.method, Method::series);
    EXPECT_EQ(sum_negated(rep.residues), rep.value.value());
  }
}

TEST(SeriesResidue, SimplePolesReproduceDistinctFormula) {
  testing::InstanceGenerator gen(33);
  for (int i = 0; i < 100; ++i) {
    const Instance inst(gen.distinct_speeds(gen.count(1, 6)), gen.distinct_speeds(gen.count(0, 6)));
    const auto g = group(inst);
    // group() sorts, so compare against distinct on the same (sorted) order.
    const auto series = p_a_wins_series(g);
    const auto distinct = p_a_wins_distinct(g.expand());
    EXPECT_EQ(series.value, distinct.value);
    EXPECT_EQ(series.residues, distinct.residues);
  }
}

TEST(ResidueSum, AllResiduesCancelAndOriginIsOne) {
  testing::InstanceGenerator gen(34);
  for (int i = 0; i < 100; ++i) {
    const Instance inst = gen.instance(5, 5);
    const auto g = group(inst);
    const AllResidues all = all_residues(g);
    EXPECT_EQ(all.origin, r(1));
    EXPECT_EQ(all.total(), r(0));
    // b-pole residues are exactly the a-pole residues of the swapped problem,
    // so P(A wins) + P(B wins) = 1.
    EXPECT_EQ(sum_negated(all.b_poles), p_a_wins_series(g.swapped()).value.value());
    EXPECT_EQ(p_a_wins_series(g).value.value() + p_a_wins_series(g.swapped()).value.value(), r(1));
  }
}

TEST(RationalFunctionSpec, FactorLayout) {
  const RationalFunctionSpec phi(GroupedInstance({{r(2), 3}}, {{r(5), 1}, {r(7), 2}}));
  ASSERT_EQ(phi.factors().size(), 4U);
  EXPECT_EQ(phi.a_pole_count(), 1U);
  EXPECT_EQ(phi.b_pole_count(), 2U);
  EXPECT_EQ(phi.kind(0), PoleKind::origin);
  EXPECT_EQ(phi.kind(1), PoleKind::a_pole);
  EXPECT_EQ(phi.kind(3), PoleKind::b_pole);
  EXPECT_EQ(phi.factors()[1].pole(), r(1, 2));
  EXPECT_EQ(phi.factors()[2].pole(), r(-1, 5));
  EXPECT_EQ(phi.factors()[1].exponent, 3U);
}

TEST(EqualSpeed, KnownValues) {
  EXPECT_EQ(s_equal_speed(1, 1).value(), r(1, 2));
  EXPECT_EQ(s_equal_speed(2, 2).value(), r(1, 2));
  EXPECT_EQ(s_equal_speed(2, 1).value(), r(3, 4));
  EXPECT_EQ(s_equal_speed(3, 2).value(), r(11, 16));
  EXPECT_THROW(s_equal_speed(0, 2), InvalidInput);
}

TEST(EqualSpeed, HalfOnTheDiagonalAndMatchesSeries) {
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_EQ(s_equal_speed(k, k).value(), r(1, 2)) << k;
  for (std::size_t m = 1; m <= 7; ++m) {
    for (std::size_t n = 1; n <= 7; ++n) {
      EXPECT_EQ(s_equal_speed(m, n), p_a_wins_series(GroupedInstance({{r(1), m}}, {{r(1), n}})).value);
    }
  }
}

TEST(TwoSpeeds, KnownValues) {
  EXPECT_EQ(s_two_speeds(1, 1, r(3)).value(), r(1, 4));
  EXPECT_EQ(s_two_speeds(3, 2, r(1)), s_equal_speed(3, 2));
  EXPECT_EQ(s_two_speeds(2, 1, r(2)).value(), r(5, 9));
  EXPECT_THROW(s_two_speeds(2, 1, r(0)), InvalidInput);
}

TEST(TwoSpeeds, MatchesSeriesAndRecursive) {
  testing::InstanceGenerator gen(35);
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = gen.count(1, 6);
    const std::size_t n = gen.count(1, 6);
    const Rational v = gen.speed();
    const GroupedInstance g({{r(1), m}}, {{v, n}});
    EXPECT_EQ(s_two_speeds(m, n, v), p_a_wins_series(g).value);
    EXPECT_EQ(s_two_speeds(m, n, v).value(), exact(g.expand()));
  }
}

TEST(ClosedForm, ScalesToUnitASpeed) {
  const auto rep = p_a_wins_closed_form(GroupedInstance({{r(4), 2}}, {{r(8), 1}}));
  EXPECT_EQ(rep.value.value(), r(5, 9));
  EXPECT_EQ(rep.method, Method::per_type_equal);
  EXPECT_EQ(rep.residues, std::vector<Rational>{r(-5, 9)});
  EXPECT_EQ(p_a_wins_closed_form(GroupedInstance({{r(3), 2}}, {{r(3), 2}})).method, Method::all_equal);
  EXPECT_THROW(p_a_wins_closed_form(GroupedInstance({{r(1), 1}, {r(2), 1}}, {{r(3), 1}})), InvalidInput);
  EXPECT_FALSE(closed_form_applicable(GroupedInstance({{r(1), 1}}, {})));
}

TEST(Epsilon, ApproximatesRepeatedPoles) {
  const GroupedInstance g({{r(1), 2}}, {{r(1), 1}});
  const auto rep = p_a_wins_epsilon(g, r(1, 1000));
  EXPECT_EQ(rep.method, Method::epsilon);
  ASSERT_TRUE(rep.epsilon.has_value());
  EXPECT_EQ(*rep.epsilon, r(1, 1000));
  EXPECT_LT((rep.value.value() - r(3, 4)).abs(), r(1, 100));
  EXPECT_EQ(sum_negated(rep.residues), rep.value.value());
}

TEST(Epsilon, AlreadyDistinctInstanceIsStillPerturbed) {
  const GroupedInstance g({{r(1), 1}}, {{r(2), 1}});
  for (const Rational eps : {r(1, 10), r(1, 4000), r(3, 7)}) {
    EXPECT_EQ(p_a_wins_epsilon(g, eps).value.value(), (r(1) + eps) / (r(3) + r(2) * eps));
  }
  EXPECT_EQ(p_a_wins_series(g).value.value(), r(1, 3));
}

TEST(Epsilon, ErrorShrinksWithEpsilon) {
  const std::vector<GroupedInstance> cases{
      GroupedInstance({{r(1), 3}}, {{r(1), 2}}),
      GroupedInstance({{r(2), 2}, {r(3), 1}}, {{r(5), 1}}),
      GroupedInstance({{r(1), 2}, {r(4), 2}}, {{r(2), 3}}),
  };
  for (const auto& g : cases) {
    const Rational target = p_a_wins_series(g).value.value();
    const Rational eps = default_epsilon(g);
    Rational prev_err = (p_a_wins_epsilon(g, eps).value.value() - target).abs();
    for (long k : {10L, 100L}) {
      const Rational err = (p_a_wins_epsilon(g, eps / Rational(k)).value.value() - target).abs();
      EXPECT_LT(err, prev_err);
      prev_err = err;
    }
  }
}

TEST(Epsilon, RejectsCollidingOrNonPositiveEpsilon) {
  // 1 + 2e == 2 + e at e = 1.
  const GroupedInstance g({{r(1), 2}, {r(2), 1}}, {{r(5), 1}});
  EXPECT_THROW(p_a_wins_epsilon(g, r(1)), InvalidInput);
  EXPECT_THROW(p_a_wins_epsilon(g, r(0)), InvalidInput);
  EXPECT_THROW(p_a_wins_epsilon(g, r(-1, 10)), InvalidInput);
  EXPECT_THROW(perturb(GroupedInstance({{r(1), 1}}, {{r(1), 2}, {r(2), 1}}), r(1)), InvalidInput);
}

TEST(DefaultEpsilon, FollowsTheGapRule) {
  EXPECT_EQ(default_epsilon(GroupedInstance({{r(1), 3}}, {{r(1), 2}})), r(1, 6000));
  EXPECT_EQ(default_epsilon(GroupedInstance({{r(1), 1}, {r(2), 1}}, {{r(5), 1}})), r(1, 4000));
  EXPECT_EQ(default_epsilon(GroupedInstance({{r(1), 2}}, {{r(11, 10), 1}})), r(1, 40000));
  // One side empty, a single speed: the gap falls back to that speed.
  EXPECT_EQ(default_epsilon(GroupedInstance({{r(3), 2}}, {})), r(3, 3000));
}

TEST(DefaultEpsilon, KeepsPerturbedSpeedsDistinct) {
  testing::InstanceGenerator gen(36);
  for (int i = 0; i < 100; ++i) {
    const auto g = group(gen.instance(6, 6));
    EXPECT_NO_THROW(p_a_wins_epsilon(g, default_epsilon(g)));
  }
}

TEST(MethodNames, AreStable) {
  EXPECT_EQ(method_name(Method::distinct), "distinct");
  EXPECT_EQ(method_name(Method::series), "series");
  EXPECT_EQ(method_name(Method::all_equal), "all-equal");
  EXPECT_EQ(method_name(Method::per_type_equal), "per-type-equal");
  EXPECT_EQ(method_name(Method::epsilon), "epsilon");
  EXPECT_EQ(method_name(Method::recursive), "recursive");
}

}  // namespace
}  // namespace toyscatter
