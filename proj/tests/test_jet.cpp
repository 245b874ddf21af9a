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

#include "lauricella/jet.hpp"
#include "lauricella/poly.hpp"

namespace lauricella {
namespace {

TEST(Jet1, ConstantsHaveZeroPartials) {
    Jet1 c = Jet1::constant(Rational(5), 3);
    EXPECT_EQ(c.v, Rational(5));
    for (const auto& d : c.d) EXPECT_TRUE(d.is_zero());
}

TEST(Jet1, ProductRuleExact) {
    // f = u1, g = u2 at (2,3): (fg)' = f g' + g f'
    Jet1 f = Jet1::coordinate(Rational(2), 2, 1);
    Jet1 g = Jet1::coordinate(Rational(3), 2, 2);
    Jet1 fg = f * g;
    EXPECT_EQ(fg.v, Rational(6));
    EXPECT_EQ(fg.d[0], Rational(3));
    EXPECT_EQ(fg.d[1], Rational(2));
}

TEST(Jet1, QuotientRule) {
    // h = u1/u2 at (1,2): dh/du1 = 1/2, dh/du2 = -1/4
    Jet1 f = Jet1::coordinate(Rational(1), 2, 1);
    Jet1 g = Jet1::coordinate(Rational(2), 2, 2);
    Jet1 h = f / g;
    EXPECT_EQ(h.v, Rational(1, 2));
    EXPECT_EQ(h.d[0], Rational(1, 2));
    EXPECT_EQ(h.d[1], Rational(-1, 4));
    EXPECT_THROW(f / Jet1::constant(Rational(0), 2), Error);
}

TEST(Jet2, SquareHessian) {
    // p = u1^2 at u1 = 1/2: value 1/4, d = 1, d2 = 2
    Jet2 x = Jet2::coordinate(Rational(1, 2), 2, 1);
    Jet2 p = x * x;
    EXPECT_EQ(p.v, Rational(1, 4));
    EXPECT_EQ(p.d[0], Rational(1));
    EXPECT_EQ(p.hess(1, 1), Rational(2));
    EXPECT_EQ(p.hess(1, 2), Rational(0));
}

TEST(Jet2, QuotientSecondOrder) {
    // h = 1/u1 at u1 = 2: h = 1/2, h' = -1/4, h'' = 2/u1^3 = 1/4
    Jet2 one = Jet2::constant(Rational(1), 1);
    Jet2 x = Jet2::coordinate(Rational(2), 1, 1);
    Jet2 h = one / x;
    EXPECT_EQ(h.v, Rational(1, 2));
    EXPECT_EQ(h.d[0], Rational(-1, 4));
    EXPECT_EQ(h.hess(1, 1), Rational(1, 4));
}

TEST(Jet2, MixedPartialSymmetric) {
    // p = u1^2 u2 at (3,5): d2p/du1du2 = 2 u1 = 6 from either insertion order
    Jet2 x = Jet2::coordinate(Rational(3), 2, 1);
    Jet2 y = Jet2::coordinate(Rational(5), 2, 2);
    Jet2 p = x * x * y;
    EXPECT_EQ(p.hess(1, 2), Rational(6));
    EXPECT_EQ(p.hess(2, 1), Rational(6));
    EXPECT_EQ(p.hess(1, 1), Rational(10));
}

// jet arithmetic against formal differentiation of sampled polynomials
TEST(Jet1, AgreesWithFormalPartials) {
    std::uint64_t s = 12345;
    auto next = [&]() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 16;
    };
    const int n = 3;
    for (int it = 0; it < 40; ++it) {
        Poly p(n);
        for (int t = 0; t < 6; ++t) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = static_cast<int>(next() % 3);
            p.add_term(e, Rational(static_cast<long>(next() % 11) - 5, static_cast<long>(next() % 4) + 1));
        }
        std::vector<Rational> pt;
        for (int i = 0; i < n; ++i) pt.push_back(Rational(static_cast<long>(next() % 9) - 4, static_cast<long>(next() % 3) + 1));
        Jet1 j = jet_lift1(p, pt);
        EXPECT_EQ(j.v, p.eval(pt));
        for (int i = 1; i <= n; ++i) EXPECT_EQ(j.d[i - 1], p.partial(i).eval(pt));
        Jet2 j2 = jet_lift2(p, pt);
        EXPECT_EQ(j2.v, p.eval(pt));
        for (int i = 1; i <= n; ++i) {
            EXPECT_EQ(j2.d[i - 1], p.partial(i).eval(pt));
            for (int k = i; k <= n; ++k) EXPECT_EQ(j2.hess(i, k), p.partial(i).partial(k).eval(pt));
        }
    }
}

TEST(JetLift, SpecExamples) {
    // p = u1*u2 at (2,3): value 6, partials (3,2)
    Poly p = Poly::coordinate(2, 1) * Poly::coordinate(2, 2);
    Jet1 j = jet_lift1(p, {Rational(2), Rational(3)});
    EXPECT_EQ(j.v, Rational(6));
    EXPECT_EQ(j.d[0], Rational(3));
    EXPECT_EQ(j.d[1], Rational(2));

    Poly c5 = Poly::constant(2, Rational(5));
    Jet1 jc = jet_lift1(c5, {Rational(1), Rational(1)});
    EXPECT_EQ(jc.v, Rational(5));
    EXPECT_TRUE(jc.d[0].is_zero() && jc.d[1].is_zero());

    Poly sq = Poly::coordinate(2, 1) * Poly::coordinate(2, 1);
    Jet2 j2 = jet_lift2(sq, {Rational(1, 2), Rational(7)});
    EXPECT_EQ(j2.hess(1, 1), Rational(2));
}

} // namespace
} // namespace lauricella
