#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "toyscatter/rational.hpp"

namespace toyscatter {

/// Dense truncated power series c0 + c1 u + ... + cd u^d over the rationals.
///
/// All binary operations require equal truncation degree and throw
/// std::invalid_argument otherwise; results keep that degree.
class TruncatedSeries {
 public:
  /// Zero series of degree `degree`.
  explicit TruncatedSeries(std::size_t degree);
  /// Coefficients in ascending powers, zero-padded or cut to `degree`.
  TruncatedSeries(std::size_t degree, std::initializer_list<Rational> coefficients);
  TruncatedSeries(std::size_t degree, std::span<const Rational> coefficients);

  static TruncatedSeries constant(std::size_t degree, const Rational& c);
  static TruncatedSeries one(std::size_t degree) { return constant(degree, Rational(1)); }
  /// c0 + c1 u.
  static TruncatedSeries linear(std::size_t degree, const Rational& c0, const Rational& c1);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Same series cut to a lower degree.
  [[nodiscard]] TruncatedSeries truncate(std::size_t degree) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);
/// Multiplicative inverse by forward substitution; throws std::domain_error
/// when the constant term is zero.
TruncatedSeries series_inv(const TruncatedSeries& s);
/// s^k by square-and-multiply; s^0 is the one-series.
TruncatedSeries series_pow(const TruncatedSeries& s, std::size_t k);

inline TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) { return series_add(s, t); }
inline TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) { return series_sub(s, t); }
inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) { return series_mul(s, t); }

}  // namespace toyscatter
