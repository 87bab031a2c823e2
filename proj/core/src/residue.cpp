#include "toyscatter/residue.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "toyscatter/series.hpp"

namespace toyscatter {

namespace {

Rational negated_sum(const std::vector<Rational>& residues) {
  Rational s(0);
  for (const auto& r : residues) s -= r;
  return s;
}

void require_counts(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidInput("closed forms need at least one particle per side");
}

}  // namespace

RationalFunctionSpec::RationalFunctionSpec(const GroupedInstance& g) {
  factors_.push_back({Rational(0), Rational(1), 1});
  for (const auto& grp : g.a_groups()) factors_.push_back({Rational(1), -grp.speed, grp.multiplicity});
  for (const auto& grp : g.b_groups()) factors_.push_back({Rational(1), grp.speed, grp.multiplicity});
  a_count_ = g.a_groups().size();
}

PoleKind RationalFunctionSpec::kind(std::size_t factor_index) const {
  if (factor_index == 0) return PoleKind::origin;
  return factor_index <= a_count_ ? PoleKind::a_pole : PoleKind::b_pole;
}

Rational RationalFunctionSpec::residue(std::size_t factor_index) const {
  const LinearFactor& at = factors_.at(factor_index);
  const Rational w0 = at.pole();
  const std::size_t order = at.exponent;
  const std::size_t degree = order - 1;

  // Around w = w0 + u the chosen factor is (c1 u)^(-order); every other
  // factor is analytic and nonzero at u = 0. Multiply their positive powers
  // and invert once.
  TruncatedSeries denominator = TruncatedSeries::one(degree);
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k == factor_index) continue;
    const LinearFactor& f = factors_[k];
    const auto local = TruncatedSeries::linear(degree, f.c0 + f.c1 * w0, f.c1);
    denominator = series_mul(denominator, series_pow(local, f.exponent));
  }
  const TruncatedSeries regular = series_inv(denominator);
  return regular[degree] * at.c1.pow(-static_cast<long>(order));
}

Rational AllResidues::total() const {
  Rational s = origin;
  for (const auto& r : a_poles) s += r;
  for (const auto& r : b_poles) s += r;
  return s;
}

AllResidues all_residues(const GroupedInstance& g) {
  const RationalFunctionSpec phi(g);
  AllResidues out;
  out.origin = phi.residue(0);
  for (std::size_t k = 1; k < phi.factors().size(); ++k) {
    (phi.kind(k) == PoleKind::a_pole ? out.a_poles : out.b_poles).push_back(phi.residue(k));
  }
  return out;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::recursive: return "recursive";
    case Method::distinct: return "distinct";
    case Method::series: return "series";
    case Method::all_equal: return "all-equal";
    case Method::per_type_equal: return "per-type-equal";
    case Method::epsilon: return "epsilon";
  }
  return "unknown";
}

MethodReport p_a_wins_distinct(const Instance& inst) {
  const auto& a = inst.a();
  const auto& b = inst.b();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (a[i] == a[k]) throw InvalidInput("distinct method needs pairwise distinct a-speeds; " + a[i].str() + " repeats");
    }
  }

  std::vector<Rational> residues;
  residues.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational term(1);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k != i) term *= a[i] / (a[i] - a[k]);
    }
    for (const auto& bj : b) term *= a[i] / (a[i] + bj);
    residues.push_back(-term);
  }
  Rational value = negated_sum(residues);
  return {Probability(std::move(value)), Method::distinct, std::move(residues), std::nullopt};
}

MethodReport p_a_wins_series(const GroupedInstance& g) {
  const RationalFunctionSpec phi(g);
  std::vector<Rational> residues;
  residues.reserve(phi.a_pole_count());
  for (std::size_t k = 1; k <= phi.a_pole_count(); ++k) residues.push_back(phi.residue(k));
  Rational value = negated_sum(residues);
  return {Probability(std::move(value)), Method::series, std::move(residues), std::nullopt};
}

Probability s_equal_speed(std::size_t m, std::size_t n) {
  require_counts(m, n);
  Rational sum(0);
  for (std::size_t i = 0; i < m; ++i) {
    sum += Rational(binomial(n + i - 1, i), BigInt(1)) * Rational(2).pow(-static_cast<long>(n + i));
  }
  return Probability(sum);
}

Probability s_two_speeds(std::size_t m, std::size_t n, const Rational& v) {
  require_counts(m, n);
  if (v.sign() <= 0) throw InvalidInput("speed ratio v must be positive");
  const Rational one_plus_v = Rational(1) + v;
  Rational sum(0);
  for (std::size_t i = 0; i < m; ++i) {
    sum += Rational(binomial(n + i - 1, i), BigInt(1)) * v.pow(static_cast<long>(i)) *
           one_plus_v.pow(-static_cast<long>(n + i));
  }
  return Probability(sum);
}

bool closed_form_applicable(const GroupedInstance& g) {
  return g.a_groups().size() == 1 && g.b_groups().size() == 1;
}

MethodReport p_a_wins_closed_form(const GroupedInstance& g) {
  if (!closed_form_applicable(g)) {
    throw InvalidInput("closed form needs exactly one distinct speed per side");
  }
  const auto& ga = g.a_groups().front();
  const auto& gb = g.b_groups().front();
  const Rational v = gb.speed / ga.speed;
  const bool equal = v == Rational(1);
  Probability p = equal ? s_equal_speed(ga.multiplicity, gb.multiplicity)
                        : s_two_speeds(ga.multiplicity, gb.multiplicity, v);
  std::vector<Rational> residues{-p.value()};
  return {std::move(p), equal ? Method::all_equal : Method::per_type_equal, std::move(residues), std::nullopt};
}

Instance perturb(const GroupedInstance& g, const Rational& eps) {
  if (eps.sign() <= 0) throw InvalidInput("epsilon must be positive");
  auto split = [&eps](const GroupList& groups, std::string_view side) {
    SpeedList out;
    for (const auto& grp : groups) {
      for (std::size_t q = 1; q <= grp.multiplicity; ++q) {
        out.push_back(grp.speed + Rational(static_cast<long>(q)) * eps);
      }
    }
    SpeedList sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("epsilon " + eps.str() + " makes two perturbed speeds coincide in side " +
                         std::string(side));
    }
    return out;
  };
  return Instance(split(g.a_groups(), "a"), split(g.b_groups(), "b"));
}

MethodReport p_a_wins_epsilon(const GroupedInstance& g, const Rational& eps) {
  MethodReport r = p_a_wins_distinct(perturb(g, eps));
  r.method = Method::epsilon;
  r.epsilon = eps;
  return r;
}

Rational default_epsilon(const GroupedInstance& g) {
  std::set<Rational> values;
  for (const auto& ga : g.a_groups()) values.insert(ga.speed);
  for (const auto& gb : g.b_groups()) values.insert(gb.speed);
  for (const auto& ga : g.a_groups()) {
    for (const auto& gb : g.b_groups()) values.insert(ga.speed + gb.speed);
  }

  Rational gap = *values.begin();
  if (values.size() >= 2) {
    auto prev = values.begin();
    gap = *std::next(prev) - *prev;
    for (auto it = std::next(prev); it != values.end(); prev = it++) {
      gap = std::min(gap, *it - *prev);
    }
  }
  const auto n = static_cast<long>(g.particle_count());
  return gap / Rational(1000 * (n + 1));
}

}  // namespace toyscatter
