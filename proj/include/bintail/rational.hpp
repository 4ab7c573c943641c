#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bintail {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "a/b", integers, and plain decimals such as "0.25" or "1e-3".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
      throw std::invalid_argument("not a fraction: " + s);
    }
    r.canonicalize();
    return r;
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in: " + s);
    }
    s.resize(e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("not a number: " + std::string(text));
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a number: " + std::string(text));

  BigInt num(digits, 10);
  BigInt den = 1;
  long shift = exponent - frac_digits;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift < 0) {
    den = ten_pow;
  } else {
    num *= ten_pow;
  }
  if (negative) num = -num;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// An exact probability: a canonical fraction in [0, 1].
class RationalProb {
 public:
  RationalProb() = default;
  explicit RationalProb(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (value_ < 0 || value_ > 1) {
      throw std::domain_error("probability outside [0,1]: " + value_.get_str());
    }
  }

  const Rational& value() const { return value_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  double to_double() const { return value_.get_d(); }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const RationalProb& a, const RationalProb& b) { return a.value_ == b.value_; }
  friend bool operator==(const RationalProb& a, const Rational& b) { return a.value_ == b; }

 private:
  Rational value_{0};
};

}  // namespace bintail
