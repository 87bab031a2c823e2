#include "toyscatter/recursive.hpp"

namespace toyscatter {

namespace {

// One step of the recurrence: A's leading particle `a` meets B's leading `b`.
Rational step(const Rational& a, const Rational& b, const Rational& a_takes_b, const Rational& b_takes_a) {
  const Rational total = a + b;
  return (a * a_takes_b + b * b_takes_a) / total;
}

}  // namespace

Probability p_a_wins_recursive(const Instance& inst) {
  const auto& a = inst.a();
  const auto& b = inst.b();
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (n == 0) return Probability(Rational(1));
  if (m == 0) return Probability(Rational(0));

  // row[j] holds f(i+1, j) on entry to iteration i and f(i, j) on exit.
  // f(m, j) = 0 for j < n; f(i, n) = 1 for i < m.
  std::vector<Rational> row(n + 1, Rational(0));
  for (std::size_t ii = m; ii-- > 0;) {
    row[n] = Rational(1);
    for (std::size_t jj = n; jj-- > 0;) {
      row[jj] = step(a[ii], b[jj], row[jj + 1], row[jj]);
    }
  }
  return Probability(row[0]);
}

DpTable solve_table(const Instance& inst) {
  const auto& a = inst.a();
  const auto& b = inst.b();
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  DpTable table(m, n);
  for (std::size_t i = 0; i < m; ++i) table.set(i, n, Probability(Rational(1)));
  for (std::size_t j = 0; j < n; ++j) table.set(m, j, Probability(Rational(0)));
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      table.set(i, j, Probability(step(a[i], b[j], table.at(i, j + 1)->value(), table.at(i + 1, j)->value())));
    }
  }
  return table;
}

Probability p_a_wins_single_a(const Rational& a1, std::span<const Rational> b) {
  if (a1.sign() <= 0) throw InvalidInput("speed a1 must be positive");
  require_positive(b, "b");
  Rational p(1);
  for (const auto& bj : b) p *= a1 / (a1 + bj);
  return Probability(p);
}

}  // namespace toyscatter
