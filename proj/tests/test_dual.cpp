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

#include "lauricella/closed_form_tables.hpp"
#include "lauricella/dual.hpp"
#include "test_support.hpp"

namespace lauricella {
namespace {

TEST(EulerInverse, SmallBlocks) {
    // size 1: (1/u1)
    BlockConfig c1({1}, {Rational(1)});
    auto i1 = euler_inverse<Rational>(c1, {Rational(4)});
    EXPECT_EQ(i1[0], Rational(1, 4));

    // size 2: (1/u1, -u2/u1^2)
    BlockConfig c2({2}, {Rational(1)});
    auto i2 = euler_inverse<Rational>(c2, {Rational(3), Rational(5)});
    EXPECT_EQ(i2[0], Rational(1, 3));
    EXPECT_EQ(i2[1], Rational(-5, 9));

    // size 3: third component (u2^2 - u1 u3)/u1^3
    BlockConfig c3({3}, {Rational(1)});
    auto i3 = euler_inverse<Rational>(c3, {Rational(2), Rational(3), Rational(7)});
    EXPECT_EQ(i3[2], (Rational(9) - Rational(14)) / Rational(8));

    EXPECT_THROW(euler_inverse<Rational>(c2, {Rational(0), Rational(5)}), NonInvertibleEuler);
}

TEST(EulerInverse, InverseProperty) {
    // E^{-1} o E = e exactly, via the product structure constants
    for (const auto& sizes : {std::vector<int>{3, 2}, {2, 1, 1}, {4}, {1, 1, 1}}) {
        BlockConfig c(sizes, test_support::default_weights(sizes.size()));
        auto u = test_support::sample_point(c, 60 + static_cast<int>(sizes.size()), /*dual=*/true);
        auto inv = euler_inverse<Rational>(c, u);
        auto prod = product_structure(c);
        auto e = unit_vector_field(c);
        const int n = c.dim();
        for (int k = 1; k <= n; ++k) {
            Rational acc;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) acc += prod.get(k, i, j) * inv[i - 1] * u[j - 1];
            EXPECT_EQ(acc, e[k - 1]);
        }
    }
}

TEST(DualProduct, ClosedFormValues) {
    // all sizes 1: c*^i_{ii} = 1/u^i and zero otherwise
    BlockConfig ones({1, 1}, {Rational(1), Rational(2)});
    auto cs = dual_product<Rational>(ones, {Rational(2), Rational(5)});
    EXPECT_EQ(cs.get(1, 1, 1), Rational(1, 2));
    EXPECT_EQ(cs.get(2, 2, 2), Rational(1, 5));
    EXPECT_EQ(cs.get(1, 1, 2), Rational(0));

    // size 2: c*^2_{12} = (E^{-1})^1 = 1/u1
    BlockConfig c2({2}, {Rational(1)});
    auto cs2 = dual_product<Rational>(c2, {Rational(3), Rational(4)});
    EXPECT_EQ(cs2.get(2, 1, 2), Rational(1, 3));

    // cross-block entries vanish
    BlockConfig c21({2, 1}, {Rational(1), Rational(1)});
    auto cs21 = dual_product<Rational>(c21, {Rational(2), Rational(1), Rational(5)});
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(cs21.get(k, 1, 3), Rational(0));
}

TEST(DualProduct, CommutativeAssociativeAndUnit) {
    for (const auto& sizes : {std::vector<int>{3, 2}, {2, 2, 1}, {1, 1, 1, 1}}) {
        BlockConfig c(sizes, test_support::default_weights(sizes.size()));
        auto u = test_support::sample_point(c, 70 + static_cast<int>(sizes.size()), /*dual=*/true);
        auto cs = dual_product<Rational>(c, u);
        const int n = c.dim();
        // associativity
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int m = 1; m <= n; ++m) {
                        Rational lhs, rhs;
                        for (int l = 1; l <= n; ++l) {
                            lhs += cs.get(i, j, l) * cs.get(l, k, m);
                            rhs += cs.get(i, k, l) * cs.get(l, j, m);
                        }
                        EXPECT_EQ(lhs, rhs);
                    }
        // X * E = X for basis vectors: sum_k c*^i_{jk} u^k = delta^i_j
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Rational acc;
                for (int k = 1; k <= n; ++k) acc += cs.get(i, j, k) * u[k - 1];
                EXPECT_EQ(acc, i == j ? Rational(1) : Rational(0));
            }
    }
}

TEST(DualGamma, ClosedExamples) {
    // size 2 block: Gamma*^2_{22} = Gamma^2_{22}, Gamma*^1_{11} = -1/u1
    BlockConfig c({2}, {Rational(3, 7)});
    std::vector<Rational> u{Rational(2), Rational(5)};
    auto g = gamma_table(c, u);
    auto gs = dual_gamma_closed<Rational>(c, u, g);
    EXPECT_EQ(gs.get(2, 2, 2), g.get(2, 2, 2));
    EXPECT_EQ(gs.get(1, 1, 1), Rational(-1, 2));
}

TEST(DualGamma, CrossBlockEntriesUntouched) {
    BlockConfig c({2, 2}, test_support::default_weights(2));
    auto u = test_support::sample_point(c, 81, /*dual=*/true);
    auto g = gamma_table(c, u);
    auto gs = dual_gamma_closed<Rational>(c, u, g);
    // beta != gamma: dual equals natural
    for (int k = 1; k <= 4; ++k)
        for (int i : {1, 2})
            for (int j : {3, 4}) EXPECT_EQ(gs.get(k, i, j), g.get(k, i, j));
}

TEST(DualGamma, TwoRoutesAgree) {
    for (const auto& sizes : {std::vector<int>{2}, {3}, {2, 1}, {3, 2}, {2, 2, 1}, {1, 1, 1}, {4, 1}}) {
        BlockConfig c(sizes, test_support::default_weights(sizes.size()));
        for (int rep = 0; rep < 3; ++rep) {
            auto u = test_support::sample_point(c, 90 + rep + static_cast<int>(sizes.size()), /*dual=*/true);
            auto g = gamma_table(c, u);
            auto a = dual_gamma_closed<Rational>(c, u, g);
            auto b = dual_gamma_generic<Rational>(c, u, g);
            EXPECT_TRUE(test_support::tables_equal(a, b)) << test_support::shape_name(sizes);
        }
    }
}

TEST(DualGamma, SingleBlockThirdRoute) {
    for (int m = 2; m <= 6; ++m) {
        BlockConfig c({m}, {Rational(2, 3)});
        auto u = test_support::sample_point(c, 300 + m, /*dual=*/true);
        auto g = gamma_table(c, u);
        auto a = dual_gamma_closed<Rational>(c, u, g);
        auto b = dual_gamma_single_block_oracle<Rational>(c, u, g);
        EXPECT_TRUE(test_support::tables_equal(a, b)) << m;
    }
}

TEST(DualGamma, SemisimpleClosedForm) {
    // all sizes 1: Gamma*^i_{ij} = eps_j/(u^i-u^j), Gamma*^i_{jj} = -(u^i/u^j) Gamma*^i_{ij}
    BlockConfig c({1, 1, 1}, {Rational(2), Rational(3), Rational(5)});
    std::vector<Rational> u{Rational(1), Rational(2), Rational(4)};
    auto g = gamma_table(c, u);
    auto gs = dual_gamma_generic<Rational>(c, u, g);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            Rational expected = c.weight(j) / (u[i - 1] - u[j - 1]);
            EXPECT_EQ(gs.get(i, i, j), expected);
            EXPECT_EQ(gs.get(i, j, j), -(u[i - 1] / u[j - 1]) * expected);
        }
}

TEST(DualGamma, NablaStarEulerVanishes) {
    for (const auto& sizes : {std::vector<int>{3, 2}, {2, 1, 1}, {5}}) {
        BlockConfig c(sizes, test_support::default_weights(sizes.size()));
        auto u = test_support::sample_point(c, 400 + static_cast<int>(sizes.size()), /*dual=*/true);
        auto g = gamma_table(c, u);
        auto gs = dual_gamma_closed<Rational>(c, u, g);
        const int n = c.dim();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Rational acc = (i == j) ? Rational(1) : Rational(0);
                for (int k = 1; k <= n; ++k) acc += gs.get(i, j, k) * u[k - 1];
                EXPECT_TRUE(acc.is_zero()) << "i=" << i << " j=" << j;
            }
    }
}

TEST(DualGamma, RequiresDualRegularPoint) {
    BlockConfig c({2, 1}, {Rational(1), Rational(1)});
    ChartPoint u{Rational(2), Rational(1), Rational(0)}; // regular but u^{1(2)} = 0
    auto g = gamma_table(c, u);
    EXPECT_THROW(dual_gamma_closed<Rational>(c, u, g), NonInvertibleEuler);
    EXPECT_THROW(dual_gamma_generic<Rational>(c, u, g), NonInvertibleEuler);
}

} // namespace
} // namespace lauricella
