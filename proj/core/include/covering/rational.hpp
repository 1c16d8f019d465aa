// Copyright 2026 The Authors.
//
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

#ifndef COVERING_RATIONAL_HPP_
#define COVERING_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace covering {

// Exact rational number with arbitrary-precision numerator and denominator.
// Always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  // Parses "12", "9.5", "-0.25", "1.5e-3". Exact; no binary rounding.
  static Rational FromDecimal(std::string_view text);
  // Parses "num/den" or a bare integer.
  static Rational FromFraction(std::string_view text);
  // Exact value of a finite double.
  static Rational FromDouble(double value);
  static Rational FromInteger(const mpz_class& value);

  // "num/den", denominator always written (e.g. "1/1").
  std::string ToFraction() const;
  // Exact rounding (half away from zero) to the given number of significant
  // digits, printf %g layout with trailing zeros removed.
  std::string ToDecimal(int significant_digits = 12) const;
  // Exact rounding to a fixed number of digits after the point.
  std::string ToFixed(int decimals) const;
  double ToDouble() const { return value_.get_d(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational Abs(const Rational& value);
// n! as an exact integer-valued rational.
Rational Factorial(int n);

}  // namespace covering

#endif  // COVERING_RATIONAL_HPP_
