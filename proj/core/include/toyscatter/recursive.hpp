#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toyscatter/instance.hpp"

namespace toyscatter {

/// Full table of suffix sub-problems: entry (i, j) is P(A wins) for
/// (a_i..a_m ; b_j..b_n), zero-based. Entry (m, n) has no particles and is
/// left unset.
class DpTable {
 public:
  DpTable(std::size_t m, std::size_t n) : m_(m), n_(n), cells_((m + 1) * (n + 1)) {}

  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return cells_.size(); }

  [[nodiscard]] const std::optional<Probability>& at(std::size_t i, std::size_t j) const {
    return cells_[i * (n_ + 1) + j];
  }
  void set(std::size_t i, std::size_t j, Probability p) { cells_[i * (n_ + 1) + j] = std::move(p); }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::optional<Probability>> cells_;
};

/// Exact P(A wins) from the leading-pair recurrence
///   f(a; b) = a1/(a1+b1) f(a; b2..) + b1/(a1+b1) f(a2..; b)
/// with f(a;) = 1 and f(;b) = 0. Iterative, O(m n) exact operations and
/// O(n) live values.
Probability p_a_wins_recursive(const Instance& inst);

/// Same recurrence, keeping every sub-problem.
DpTable solve_table(const Instance& inst);

/// m = 1 product form a1^n / prod_j (a1 + b_j).
Probability p_a_wins_single_a(const Rational& a1, std::span<const Rational> b);

}  // namespace toyscatter
