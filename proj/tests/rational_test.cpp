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

#include <gtest/gtest.h>

#include <sstream>

#include "covering/errors.hpp"

namespace covering {
namespace {

TEST(RationalTest, LowestTermsPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.ToFraction(), "-3/2");
  EXPECT_EQ(Rational(5).ToFraction(), "5/1");
  EXPECT_THROW(Rational(1, 0), ArgumentError);
}

TEST(RationalTest, ParsesDecimalsExactly) {
  EXPECT_EQ(Rational::FromDecimal("9.5"), Rational(19, 2));
  EXPECT_EQ(Rational::FromDecimal("-0.25"), Rational(-1, 4));
  EXPECT_EQ(Rational::FromDecimal("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(Rational::FromDecimal("2E2"), Rational(200));
  EXPECT_EQ(Rational::FromDecimal(" 12 "), Rational(12));
  EXPECT_EQ(Rational::FromDecimal("0.1") * Rational(10), Rational(1));
  for (const char* bad : {"", "abc", "1.2.3", "1e", "--1", "1x", "."}) {
    EXPECT_THROW(Rational::FromDecimal(bad), ArgumentError) << bad;
  }
}

TEST(RationalTest, ParsesFractions) {
  EXPECT_EQ(Rational::FromFraction("3/7"), Rational(3, 7));
  EXPECT_EQ(Rational::FromFraction("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::FromFraction("8"), Rational(8));
  EXPECT_THROW(Rational::FromFraction("1/0"), ArgumentError);
  EXPECT_THROW(Rational::FromFraction("1/x"), ArgumentError);
}

TEST(RationalTest, FromDoubleIsExact) {
  EXPECT_EQ(Rational::FromDouble(0.5), Rational(1, 2));
  EXPECT_EQ(Rational::FromDouble(0.1).ToDouble(), 0.1);
  EXPECT_NE(Rational::FromDouble(0.1), Rational(1, 10));
}

TEST(RationalTest, DecimalRenderingRoundsTheExactValue) {
  EXPECT_EQ(Rational(7, 11).ToDecimal(), "0.636363636364");
  EXPECT_EQ(Rational(2, 3).ToDecimal(), "0.666666666667");
  EXPECT_EQ(Rational(-2, 3).ToDecimal(), "-0.666666666667");
  EXPECT_EQ(Rational(1).ToDecimal(), "1");
  EXPECT_EQ(Rational(0).ToDecimal(), "0");
  EXPECT_EQ(Rational(19, 2).ToDecimal(), "9.5");
  EXPECT_EQ(Rational(1, 8).ToDecimal(3), "0.125");
  EXPECT_EQ(Rational(1, 8).ToDecimal(2), "0.13");
  EXPECT_EQ(Rational(999999, 1000000).ToDecimal(3), "1");
  EXPECT_EQ(Rational(1234, 100000000).ToDecimal(), "1.234e-05");
  EXPECT_EQ(Rational(1000000000000000L).ToDecimal(), "1e+15");
  EXPECT_EQ(Rational(123456, 1000).ToDecimal(12), "123.456");
  EXPECT_THROW(Rational(1).ToDecimal(0), ArgumentError);
}

TEST(RationalTest, FixedRendering) {
  EXPECT_EQ(Rational(-6727162, 1000000).ToFixed(3), "-6.727");
  EXPECT_EQ(Rational(1, 200).ToFixed(2), "0.01");
  EXPECT_EQ(Rational(-1, 3000).ToFixed(3), "0.000");
  EXPECT_EQ(Rational(5).ToFixed(0), "5");
  EXPECT_EQ(Rational(89, 10000).ToFixed(3), "0.009");
}

TEST(RationalTest, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_EQ(Abs(-a), a);
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rational(0), ArgumentError);
}

TEST(RationalTest, Factorial) {
  EXPECT_EQ(Factorial(0), Rational(1));
  EXPECT_EQ(Factorial(5), Rational(120));
  EXPECT_EQ(Factorial(25).ToFraction(), "15511210043330985984000000/1");
  EXPECT_THROW(Factorial(-1), ArgumentError);
}

TEST(RationalTest, StreamsAsFraction) {
  std::ostringstream out;
  out << Rational(3, 7);
  EXPECT_EQ(out.str(), "3/7");
}

}  // namespace
}  // namespace covering
