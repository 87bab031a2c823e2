#include "toyscatter/rational.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <ostream>
#include <system_error>
#include <utility>

namespace toyscatter {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

BigInt parse_integer(std::string_view digits) {
  return BigInt(std::string(digits), 10);
}

// Parses [sign] digits [. digits] [(e|E) [sign] digits] exactly.
Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_text = text.substr(epos + 1);
    text = text.substr(0, epos);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw InvalidInput("malformed exponent in number '" + std::string(original) + "'");
    }
    long e = 0;
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), e);
    exponent = exp_negative ? -e : e;
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw InvalidInput("malformed number '" + std::string(original) + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw InvalidInput("malformed number '" + std::string(original) + "'");
  }

  std::string digits(int_part);
  digits.append(frac_part);
  BigInt num = parse_integer(digits);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());

  if (exponent >= 0) return Rational(BigInt(num * pow10(static_cast<unsigned long>(exponent))));
  return Rational(num, pow10(static_cast<unsigned long>(-exponent)));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num_text = trim(text.substr(0, slash));
    std::string_view den_text = trim(text.substr(slash + 1));
    bool negative = false;
    if (!num_text.empty() && (num_text.front() == '-' || num_text.front() == '+')) {
      negative = num_text.front() == '-';
      num_text.remove_prefix(1);
    }
    if (!all_digits(num_text) || !all_digits(den_text)) {
      throw InvalidInput("malformed rational '" + std::string(original) + "'");
    }
    BigInt den = parse_integer(den_text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(original) + "'");
    BigInt num = parse_integer(num_text);
    if (negative) num = -num;
    return Rational(num, den);
  }
  return parse_decimal(text, original);
}

Rational Rational::from_double_text(double v) {
  if (!std::isfinite(v)) throw InvalidInput("non-finite number");
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc{}) throw InvalidInput("unrepresentable number");
  return parse(std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data())));
}

std::string Rational::fraction() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::decimal(int significant) const {
  if (significant < 1) throw std::invalid_argument("significant digits must be >= 1");
  // Zero keeps the fixed width: "0." plus significant-1 zeros.
  if (is_zero()) return significant == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(significant - 1), '0');

  const mpq_class mag = ::abs(q_);
  // Locate e with 10^e <= mag < 10^(e+1), starting from the digit counts.
  const auto num_digits = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10));
  const auto den_digits = static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
  long e = num_digits - den_digits;
  auto ten_pow = [](long k) {
    mpq_class r(1);
    if (k >= 0) {
      r = mpq_class(pow10(static_cast<unsigned long>(k)));
    } else {
      r = mpq_class(BigInt(1), pow10(static_cast<unsigned long>(-k)));
    }
    return r;
  };
  while (mag >= ten_pow(e + 1)) ++e;
  while (mag < ten_pow(e)) --e;

  // N = round_half_up(mag * 10^(significant-1-e)).
  const mpq_class scaled = mag * ten_pow(significant - 1 - e);
  BigInt twice = scaled.get_num() * 2 + scaled.get_den();
  BigInt n = twice / (scaled.get_den() * 2);
  if (n == pow10(static_cast<unsigned long>(significant))) {
    n /= 10;
    ++e;
  }

  std::string digits = n.get_str();
  std::string out = sign() < 0 ? "-" : "";
  if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (int_len >= digits.size()) {
      out += digits;
      out.append(int_len - digits.size(), '0');
    } else {
      out += digits.substr(0, int_len);
      out += '.';
      out += digits.substr(int_len);
    }
  } else {
    out += "0.";
    out.append(static_cast<std::size_t>(-e - 1), '0');
    out += digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t scaled_threshold_u64(const Rational& r) {
  if (r.sign() < 0 || r >= Rational(1)) {
    throw std::domain_error("threshold probability must lie in [0, 1)");
  }
  BigInt scaled = r.numerator();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 64);
  scaled /= r.denominator();  // floor for non-negative operands
  const BigInt lo = scaled & BigInt(0xFFFFFFFFUL);
  const BigInt hi = scaled >> 32;
  return (static_cast<std::uint64_t>(hi.get_ui()) << 32) | static_cast<std::uint64_t>(lo.get_ui());
}

}  // namespace toyscatter
