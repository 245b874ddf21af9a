/*
   Copyright 2026 The lauricella authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "lauricella/rational.hpp"

#include <cstdint>

namespace lauricella {
namespace {

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(2, 4).str(), "1/2");
    EXPECT_EQ(Rational(-2, 4).str(), "-1/2");
    EXPECT_EQ(Rational(2, -4).str(), "-1/2");
    EXPECT_EQ(Rational(0, 7).str(), "0");
    EXPECT_EQ(Rational(6, 3).str(), "2");
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "5", "-5", "1/2", "-7/3", "123456789012345678901234567891/7"}) {
        EXPECT_EQ(Rational::parse(s).str(), s);
    }
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
}

TEST(Rational, ExactArithmetic) {
    Rational a(355, 113), b(-7, 39);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a * Rational(0), Rational(0));
    EXPECT_THROW(a / Rational(0), Error);
    // no rounding: (1/3)*3 is exactly 1
    EXPECT_EQ(Rational(1, 3) * Rational(3), Rational(1));
}

TEST(Rational, OrderingAndAbs) {
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_GT(Rational(5, 4), Rational(6, 5));
    EXPECT_EQ(abs(Rational(-3, 7)), Rational(3, 7));
    EXPECT_EQ(Rational(2, 6), Rational(1, 3));
}

TEST(Rational, PowInt) {
    EXPECT_EQ(pow_int(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow_int(Rational(2, 3), 0), Rational(1));
    EXPECT_EQ(pow_int(Rational(2), -2), Rational(1, 4));
}

// deterministic mini fuzz: field axioms on pseudo-random values
TEST(Rational, FieldAxiomsSampled) {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    auto rnd = [&]() {
        long num = static_cast<long>(next() % 41) - 20;
        long den = static_cast<long>(next() % 5) + 1;
        return Rational(num, den);
    };
    for (int it = 0; it < 200; ++it) {
        Rational a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

} // namespace
} // namespace lauricella
