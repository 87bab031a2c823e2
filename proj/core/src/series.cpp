#include "toyscatter/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toyscatter {

namespace {

void require_same_degree(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.degree() != t.degree()) {
    throw std::invalid_argument("series degree mismatch: " + std::to_string(s.degree()) + " vs " +
                                std::to_string(t.degree()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t degree) : coeffs_(degree + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::size_t degree, std::initializer_list<Rational> coefficients)
    : TruncatedSeries(degree, std::span<const Rational>(coefficients.begin(), coefficients.size())) {}

TruncatedSeries::TruncatedSeries(std::size_t degree, std::span<const Rational> coefficients)
    : coeffs_(degree + 1, Rational(0)) {
  const std::size_t n = std::min(coefficients.size(), coeffs_.size());
  std::copy_n(coefficients.begin(), n, coeffs_.begin());
}

TruncatedSeries TruncatedSeries::constant(std::size_t degree, const Rational& c) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::linear(std::size_t degree, const Rational& c0, const Rational& c1) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = c0;
  if (degree >= 1) s.coeffs_[1] = c1;
  return s;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t degree) const {
  if (degree > this->degree()) throw std::invalid_argument("truncate can only lower the degree");
  return TruncatedSeries(degree, std::span<const Rational>(coeffs_.data(), degree + 1));
}

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_same_degree(s, t);
  std::vector<Rational> c(s.coefficients());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += t[k];
  return TruncatedSeries(s.degree(), c);
}

TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_same_degree(s, t);
  std::vector<Rational> c(s.coefficients());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= t[k];
  return TruncatedSeries(s.degree(), c);
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_same_degree(s, t);
  const std::size_t d = s.degree();
  std::vector<Rational> c(d + 1, Rational(0));
  for (std::size_t i = 0; i <= d; ++i) {
    if (s[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= d; ++j) c[i + j] += s[i] * t[j];
  }
  return TruncatedSeries(d, c);
}

TruncatedSeries series_inv(const TruncatedSeries& s) {
  if (s[0].is_zero()) throw std::domain_error("series has zero constant term and no inverse");
  const std::size_t d = s.degree();
  const Rational inv0 = s[0].reciprocal();
  std::vector<Rational> t(d + 1, Rational(0));
  t[0] = inv0;
  // sum_{j=0..k} s_j t_{k-j} = 0 for k >= 1.
  for (std::size_t k = 1; k <= d; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (!s[j].is_zero()) acc += s[j] * t[k - j];
    }
    t[k] = -acc * inv0;
  }
  return TruncatedSeries(d, t);
}

TruncatedSeries series_pow(const TruncatedSeries& s, std::size_t k) {
  TruncatedSeries result = TruncatedSeries::one(s.degree());
  TruncatedSeries base = s;
  while (k > 0) {
    if (k & 1U) result = series_mul(result, base);
    k >>= 1U;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

}  // namespace toyscatter
