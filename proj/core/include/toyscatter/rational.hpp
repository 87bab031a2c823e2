#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace toyscatter {

using BigInt = mpz_class;

/// Raised for malformed or out-of-domain user input (bad speeds, empty
/// instances, unparsable numbers). The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number backed by GMP.
///
/// Always stored in lowest terms with a positive denominator. Unlike a raw
/// mpq_class, division by zero throws std::domain_error instead of aborting.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& v) : q_(v) {}
  explicit Rational(mpq_class q);

  /// Accepts "7", "-3/4", "0.9", "1.25e-3". Decimal text is converted
  /// exactly: "0.1" is 1/10.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double, via its shortest round-trip decimal
  /// form. 0.9 becomes 9/10, not the nearest binary fraction.
  static Rational from_double_text(double v);

  [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  /// "p/q" for every value, including integers ("1/1").
  [[nodiscard]] std::string fraction() const;
  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  /// Decimal rendering rounded half-up to `significant` digits. Zero
  /// renders as "0".
  [[nodiscard]] std::string decimal(int significant = 12) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  [[nodiscard]] Rational reciprocal() const { return Rational(1) / *this; }
  /// Integer power; negative exponents invert (and throw on zero).
  [[nodiscard]] Rational pow(long exponent) const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// floor(2^64 * r) for r in [0, 1). Used as an exact Bernoulli threshold.
std::uint64_t scaled_threshold_u64(const Rational& r);

}  // namespace toyscatter
