// Copyright 2026 The Dominia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dominia/rational.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "dominia/errors.h"

namespace dominia {
namespace {

TEST(RationalTest, ParseNormalizes) {
  EXPECT_EQ(Rational::Parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::Parse("-2/4").ToString(), "-1/2");
  EXPECT_EQ(Rational::Parse("+7").ToString(), "7");
  EXPECT_EQ(Rational::Parse("0/5").ToString(), "0");
  EXPECT_EQ(Rational(4, -6).ToString(), "-2/3");
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const char* bad : {"1/0", "", "1.5", "a", "1/", "/2", "1//2", " 1"}) {
    try {
      (void)Rational::Parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParseError) << bad;
    }
  }
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, ArithmeticAndOrder) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_EQ((-a).sign(), -1);
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(a.is_integer());
}

TEST(RationalTest, ToStringRoundTripsOnRandomValues) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = static_cast<long>(rng() % 999) + 1;
    const Rational r(num, den);
    EXPECT_EQ(Rational::Parse(r.ToString()), r);
    EXPECT_EQ(CompareDifference(r, Rational(0)), r.sign());
  }
}

TEST(RationalTest, HugeValuesStayExact) {
  Rational x(1);
  for (int k = 0; k < 200; ++k) x *= Rational(3, 2);
  for (int k = 0; k < 200; ++k) x /= Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}

}  // namespace
}  // namespace dominia
