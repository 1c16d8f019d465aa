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

#include "covering/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <string>

#include "covering/errors.hpp"

namespace covering {
namespace {

mpz_class Pow10(long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

// Rounds a non-negative rational to the nearest integer, halves away from 0.
mpz_class RoundHalfUp(const mpq_class& value) {
  mpz_class twice_num = 2 * value.get_num() + value.get_den();
  mpz_class twice_den = 2 * value.get_den();
  mpz_class result;
  mpz_fdiv_q(result.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
  return result;
}

// Largest e with 10^e <= value, for value > 0.
long DecimalExponent(const mpq_class& value) {
  const long num_bits =
      static_cast<long>(mpz_sizeinbase(value.get_num().get_mpz_t(), 2));
  const long den_bits =
      static_cast<long>(mpz_sizeinbase(value.get_den().get_mpz_t(), 2));
  long e = static_cast<long>((num_bits - den_bits) * 0.30102999566398120);
  auto pow10q = [](long k) {
    return k >= 0 ? mpq_class(Pow10(k)) : mpq_class(mpz_class(1), Pow10(-k));
  };
  while (pow10q(e) > value) --e;
  while (pow10q(e + 1) <= value) ++e;
  return e;
}

void TrimFraction(std::string& digits) {
  if (digits.find('.') == std::string::npos) return;
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  if (!digits.empty() && digits.back() == '.') digits.pop_back();
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ArgumentError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw ArgumentError("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::FromInteger(const mpz_class& value) {
  return Rational(mpq_class(value));
}

Rational Rational::FromDecimal(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  const std::string original(text);
  if (s.empty()) throw ArgumentError("empty decimal string");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ArgumentError("malformed decimal: '" + original + "'");
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') {
      throw ArgumentError("malformed decimal: '" + original + "'");
    }
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_negative = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw ArgumentError("malformed decimal: '" + original + "'");
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])) || exponent > 100000) {
        throw ArgumentError("malformed decimal: '" + original + "'");
      }
      exponent = exponent * 10 + (s[i] - '0');
    }
    if (exp_negative) exponent = -exponent;
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long shift = exponent - scale;
  mpq_class value = shift >= 0 ? mpq_class(mantissa * Pow10(shift))
                               : mpq_class(mantissa, Pow10(-shift));
  value.canonicalize();
  return Rational(std::move(value));
}

Rational Rational::FromFraction(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpq_class(mpz_class(s, 10)));
    }
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw ArgumentError("zero denominator in '" + s + "'");
    return Rational(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw ArgumentError("malformed fraction: '" + s + "'");
  }
}

Rational Rational::FromDouble(double value) {
  if (!std::isfinite(value)) throw ArgumentError("non-finite double");
  return Rational(mpq_class(value));
}

std::string Rational::ToFraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::ToDecimal(int significant_digits) const {
  if (significant_digits < 1) throw ArgumentError("need >= 1 significant digit");
  if (is_zero()) return "0";
  const mpq_class magnitude = abs(value_);
  long e = DecimalExponent(magnitude);
  const long shift = significant_digits - 1 - e;
  mpq_class scaled = magnitude;
  if (shift >= 0) {
    scaled *= mpq_class(Pow10(shift));
  } else {
    scaled /= mpq_class(Pow10(-shift));
  }
  mpz_class rounded = RoundHalfUp(scaled);
  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // Rounded up to the next power of ten.
    digits.pop_back();
    ++e;
  }
  std::string out = sign() < 0 ? "-" : "";
  if (e >= -4 && e < significant_digits) {
    if (e >= 0) {
      std::string body = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
      TrimFraction(body);
      out += body;
    } else {
      std::string body = "0." + std::string(-e - 1, '0') + digits;
      TrimFraction(body);
      out += body;
    }
  } else {
    std::string body = digits.substr(0, 1) + "." + digits.substr(1);
    TrimFraction(body);
    const long abs_e = e < 0 ? -e : e;
    out += body + (e < 0 ? "e-" : "e+") + (abs_e < 10 ? "0" : "") +
           std::to_string(abs_e);
  }
  return out;
}

std::string Rational::ToFixed(int decimals) const {
  if (decimals < 0) throw ArgumentError("negative decimal count");
  const mpq_class magnitude = abs(value_);
  mpz_class rounded = RoundHalfUp(magnitude * mpq_class(Pow10(decimals)));
  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, decimals + 1 - digits.size(), '0');
  }
  std::string out = (sign() < 0 && rounded != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - decimals);
  if (decimals > 0) out += "." + digits.substr(digits.size() - decimals);
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw ArgumentError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToFraction();
}

Rational Abs(const Rational& value) {
  return value.sign() < 0 ? -value : value;
}

Rational Factorial(int n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational::FromInteger(result);
}

}  // namespace covering
