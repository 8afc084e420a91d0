// Copyright 2026 The DSHP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSHP_RATIONAL_HPP_
#define DSHP_RATIONAL_HPP_

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace dshp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number of arbitrary precision, always in lowest terms with
/// a positive denominator.
///
/// Thin value wrapper over `boost::multiprecision::cpp_rational`. There is no
/// conversion from or to floating point: values enter through integers,
/// integer pairs, or the decimal/fraction text forms accepted by `parse`.
class Rational {
 public:
  using Impl = boost::multiprecision::cpp_rational;

  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(const BigInt& value) : value_(value) {}

  // Throws std::domain_error when `denominator` is zero.
  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    if (denominator < 0) {
      value_ = Impl(-numerator, -denominator);
    } else {
      value_ = Impl(numerator, denominator);
    }
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  int sign() const { return value_.sign(); }
  bool is_integer() const { return denominator() == 1; }

  // "a" for integers, "a/b" otherwise.
  std::string to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  // Accepts "[+-]digits", "[+-]digits.digits" and "[+-]digits/digits".
  // Decimals are converted exactly (0.1 is 1/10).
  static std::optional<Rational> parse(std::string_view text);

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

  const Impl& impl() const { return value_; }

 private:
  Impl value_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  // cpp_int reads a leading zero as an octal prefix.
  auto to_int = [](std::string_view s) {
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) return std::nullopt;
    BigInt d = to_int(den);
    if (d == 0) return std::nullopt;
    result = Rational(to_int(num), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!is_digits(whole) || !is_digits(frac)) return std::nullopt;
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(frac.size()));
    result = Rational(to_int(std::string(whole) + std::string(frac)), scale);
  } else {
    if (!is_digits(text)) return std::nullopt;
    result = Rational(to_int(text));
  }
  return negative ? -result : result;
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace dshp

#endif  // DSHP_RATIONAL_HPP_
