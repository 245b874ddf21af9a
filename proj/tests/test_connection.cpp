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
#include "lauricella/connection.hpp"
#include "test_support.hpp"

namespace lauricella {
namespace {

TEST(GammaSeed, FirstValues) {
    // sizes (2,1), eps arbitrary, u = (2,1,0)
    BlockConfig c({2, 1}, {Rational(1, 4), Rational(1)});
    std::vector<Rational> u{Rational(2), Rational(1), Rational(0)};
    GammaBuilder<Rational> b(c, u);
    EXPECT_EQ(b.seed(1, 2, 1), Rational(1, 2));            // eps3/(u1-u3) = 1/2
    EXPECT_EQ(b.seed(1, 2, 2), Rational(-1, 4));           // -eps3 u2/(u1-u3)^2
    EXPECT_EQ(b.seed(1, 2, 0), Rational(0));
    EXPECT_EQ(b.seed(2, 1, 1), Rational(2) * Rational(1, 4) / Rational(-2)); // 2 eps1/(u3-u1)
}

TEST(GammaEntry, CategoryExamples) {
    // sizes (3): Gamma^3_{22} = 3 eps1 u3 / (u2)^2
    BlockConfig c3({3}, {Rational(2, 7)});
    std::vector<Rational> u3{Rational(1), Rational(2), Rational(5)};
    EXPECT_EQ(gamma_entry(c3, u3, 3, 2, 2), Rational(3) * Rational(2, 7) * Rational(5) / Rational(4));

    // sizes (1,1,1): distinct blocks vanish
    BlockConfig ones({1, 1, 1}, {Rational(1), Rational(2), Rational(3)});
    std::vector<Rational> uo{Rational(1), Rational(2), Rational(4)};
    EXPECT_EQ(gamma_entry(ones, uo, 3, 1, 2), Rational(0));

    // sizes (1,1): Gamma^1_{12} = eps2/(u1-u2)
    BlockConfig two({1, 1}, {Rational(3), Rational(5)});
    std::vector<Rational> ut{Rational(2), Rational(7)};
    EXPECT_EQ(gamma_entry(two, ut, 1, 1, 2), Rational(5) / Rational(-5));

    // sizes (2,1): Gamma^{3}_{11} = -g^{(2)}_1(1) = 2 eps1/(u1-u3)
    BlockConfig c21({2, 1}, {Rational(1, 3), Rational(1)});
    std::vector<Rational> u21{Rational(4), Rational(1), Rational(-2)};
    EXPECT_EQ(gamma_entry(c21, u21, 3, 1, 1), Rational(2) * Rational(1, 3) / Rational(6));
}

TEST(GammaTable, SingleSize2Block) {
    BlockConfig c({2}, {Rational(1)});
    auto t = gamma_table(c, {Rational(5), Rational(2)});
    EXPECT_EQ(t.entries.entries().size(), 1u);
    EXPECT_EQ(t.get(2, 2, 2), Rational(-1));
    EXPECT_THROW(gamma_table(c, {Rational(5), Rational(0)}), NonRegularPoint);
}

TEST(GammaTable, SymmetricLowerIndices) {
    BlockConfig c({3, 2}, test_support::default_weights(2));
    auto u = test_support::sample_point(c, 11);
    GammaBuilder<Rational> b(c, u);
    for (int k = 1; k <= 5; ++k)
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) EXPECT_EQ(b.entry(k, i, j), b.entry(k, j, i));
}

TEST(GammaTable, UnitFlatness) {
    // sum_s Gamma^{i(a)}_{1(s) j(b)} = 0 for all i(a), j(b)
    for (const auto& sizes : {std::vector<int>{3, 2}, {2, 2, 1}, {4, 1}, {1, 1, 1}}) {
        BlockConfig c(sizes, test_support::default_weights(sizes.size()));
        auto u = test_support::sample_point(c, 5);
        GammaBuilder<Rational> b(c, u);
        const int n = c.dim();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Rational s;
                for (int blk = 1; blk <= c.blocks(); ++blk) s += b.entry(i, c.flat_index(blk, 1), j);
                EXPECT_TRUE(s.is_zero()) << "i=" << i << " j=" << j;
            }
    }
}

TEST(GammaTable, ShiftRelations) {
    // intra-block shifts and the cross-block reduction
    BlockConfig c({4, 3}, test_support::default_weights(2));
    auto u = test_support::sample_point(c, 23);
    GammaBuilder<Rational> b(c, u);
    for (int blk = 1; blk <= 2; ++blk) {
        const int m = c.size_of(blk);
        auto f = [&](int x) { return c.flat_index(blk, x); };
        // Gamma^{k}_{(i-1) j} = Gamma^{k}_{i (j-1)} with every displayed lower
        // index at least 2 (the relation mixes entry families otherwise)
        for (int k = 1; k <= m; ++k)
            for (int i = 3; i <= m; ++i)
                for (int j = 3; j <= m; ++j)
                    EXPECT_EQ(b.entry(f(k), f(i - 1), f(j)), b.entry(f(k), f(i), f(j - 1)));
        // Gamma^{k}_{ij} = Gamma^{k+1}_{i (j+1)} for j != 1
        for (int k = 1; k < m; ++k)
            for (int i = 1; i <= m; ++i)
                for (int j = 2; j < m; ++j)
                    EXPECT_EQ(b.entry(f(k), f(i), f(j)), b.entry(f(k + 1), f(i), f(j + 1)));
    }
    // Gamma^{k(a)}_{i(a) j(b)} = -Gamma^{(k-i+1)(a)}_{1(b) j(b)}
    for (int k = 1; k <= 4; ++k)
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 3; ++j) {
                Rational lhs = b.entry(c.flat_index(1, k), c.flat_index(1, i), c.flat_index(2, j));
                int s = k - i + 1;
                Rational rhs = (s >= 1 && s <= 4)
                                   ? -b.entry(c.flat_index(1, s), c.flat_index(2, 1), c.flat_index(2, j))
                                   : Rational(0);
                EXPECT_EQ(lhs, rhs);
            }
}

TEST(GammaTable, WeightedSumIdentities) {
    // sum_k Gamma^{i(a)}_{j(b) k} u^k has a closed form depending only on
    // whether i = j and whether the blocks coincide
    for (const auto& sizes : {std::vector<int>{3, 2}, {2, 1, 1}, {5}}) {
        BlockConfig c(sizes, test_support::default_weights(sizes.size()));
        auto u = test_support::sample_point(c, 17);
        GammaBuilder<Rational> b(c, u);
        Rational total;
        for (int blk = 1; blk <= c.blocks(); ++blk) total += Rational(c.size_of(blk)) * c.weight(blk);
        for (int a = 1; a <= c.blocks(); ++a)
            for (int bb = 1; bb <= c.blocks(); ++bb)
                for (int i = 1; i <= c.size_of(a); ++i)
                    for (int j = 1; j <= c.size_of(bb); ++j) {
                        Rational sum;
                        for (int k = 1; k <= c.dim(); ++k)
                            sum += b.entry(c.flat_index(a, i), c.flat_index(bb, j), k) * u[k - 1];
                        Rational expected;
                        if (i == j && a == bb) {
                            if (i == 1)
                                expected = -(total - Rational(c.size_of(a)) * c.weight(a));
                            else
                                expected = -total;
                        } else if (i == j && i == 1) {
                            expected = Rational(c.size_of(bb)) * c.weight(bb);
                        }
                        EXPECT_EQ(sum, expected) << "a=" << a << " b=" << bb << " i=" << i << " j=" << j;
                    }
    }
}

TEST(GammaTable, ScalingHomogeneity) {
    BlockConfig c({2, 2, 1}, test_support::default_weights(3));
    auto u = test_support::sample_point(c, 29);
    Rational lambda(3, 7);
    ChartPoint scaled;
    for (const auto& x : u) scaled.push_back(x * lambda);
    auto t1 = gamma_table(c, u);
    auto t2 = gamma_table(c, scaled);
    auto keys = Tensor3<Rational>::key_union(t1.entries, t2.entries);
    for (const auto& k : keys)
        EXPECT_EQ(t2.entries.get(k[0], k[1], k[2]), t1.entries.get(k[0], k[1], k[2]) / lambda);
}

TEST(GammaTable, DerivativeShift) {
    // with jets: dGamma^{k(g)}_{i(a)j(b)}/du^{l(d)} = dGamma^{(k-1)(g)}_{i(a)j(b)}/du^{(l-1)(d)}
    // for k >= 2, l >= 3
    BlockConfig c({4, 3}, test_support::default_weights(2));
    auto pt = test_support::sample_point(c, 41);
    GammaBuilder<Jet1> b(c, lift_point<Jet1>(pt));
    const int n = c.dim();
    for (int gblk = 1; gblk <= 2; ++gblk)
        for (int k = 2; k <= c.size_of(gblk); ++k)
            for (int dblk = 1; dblk <= 2; ++dblk)
                for (int l = 3; l <= c.size_of(dblk); ++l)
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                            Jet1 hi = b.entry(c.flat_index(gblk, k), i, j);
                            Jet1 lo = b.entry(c.flat_index(gblk, k - 1), i, j);
                            EXPECT_EQ(hi.d[c.flat_index(dblk, l) - 1], lo.d[c.flat_index(dblk, l - 1) - 1]);
                        }
}

TEST(Oracles, SemisimpleAgrees) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> sizes(n, 1);
        BlockConfig c(sizes, test_support::default_weights(n));
        auto u = test_support::sample_point(c, 100 + n);
        auto lhs = gamma_table(c, u);
        auto rhs = gamma_semisimple_oracle<Rational>(c, u);
        EXPECT_TRUE(test_support::tables_equal(lhs, rhs));
    }
    BlockConfig bad({2}, {Rational(1)});
    EXPECT_THROW(gamma_semisimple_oracle<Rational>(bad, {Rational(1), Rational(2)}), NotSemisimpleConfig);
}

TEST(Oracles, SemisimpleClosedFormValues) {
    // n=3: Gamma^1_{11} = -eps2/(u1-u2) - eps3/(u1-u3)
    BlockConfig c({1, 1, 1}, {Rational(2), Rational(3), Rational(5)});
    std::vector<Rational> u{Rational(1), Rational(2), Rational(4)};
    auto t = gamma_semisimple_oracle<Rational>(c, u);
    EXPECT_EQ(t.get(1, 1, 1), -(Rational(3) / Rational(-1)) - Rational(5) / Rational(-3));
    EXPECT_EQ(t.get(1, 1, 2), Rational(3) / Rational(-1));
    EXPECT_EQ(t.get(1, 2, 3), Rational(0));
}

TEST(Oracles, SingleBlockAgrees) {
    for (int m = 2; m <= 8; ++m) {
        BlockConfig c({m}, {Rational(5, 3)});
        auto u = test_support::sample_point(c, 200 + m);
        auto lhs = gamma_table(c, u);
        auto rhs = gamma_single_block_oracle<Rational>(c, u);
        EXPECT_TRUE(test_support::tables_equal(lhs, rhs)) << "m=" << m;
    }
    BlockConfig bad({2, 1}, {Rational(1), Rational(1)});
    EXPECT_THROW(gamma_single_block_oracle<Rational>(bad, test_support::sample_point(bad, 1)), NotSingleBlock);
}

TEST(Oracles, SingleBlockClosedFormValues) {
    // m=4: Gamma^4_{22} = 4 eps1 (u2 u4 - u3^2)/(u2)^3
    BlockConfig c({4}, {Rational(1, 2)});
    std::vector<Rational> u{Rational(1), Rational(2), Rational(3), Rational(5)};
    auto t = gamma_single_block_oracle<Rational>(c, u);
    EXPECT_EQ(t.get(4, 2, 2), Rational(4) * Rational(1, 2) * (Rational(10) - Rational(9)) / Rational(8));
    // lower index 1 kills everything
    for (int k = 1; k <= 4; ++k)
        for (int j = 1; j <= 4; ++j) EXPECT_EQ(t.get(k, 1, j), Rational(0));
    // m=5 head formula
    BlockConfig c5({5}, {Rational(1)});
    std::vector<Rational> u5{Rational(1), Rational(2), Rational(3), Rational(5), Rational(7)};
    auto t5 = gamma_single_block_oracle<Rational>(c5, u5);
    Rational expect = Rational(5) * (Rational(4) * Rational(7) - Rational(2) * Rational(2) * Rational(3) * Rational(5) + Rational(27)) / Rational(16);
    EXPECT_EQ(t5.get(5, 2, 2), expect);
}

TEST(Oracles, SmallDimensionAgrees) {
    for (const auto& sizes : all_compositions_up_to(5)) {
        BlockConfig c(sizes, test_support::default_weights(sizes.size()));
        for (int rep = 0; rep < 5; ++rep) {
            auto u = test_support::sample_point(c, 300 + 10 * rep + static_cast<int>(sizes.size()));
            auto lhs = gamma_table(c, u);
            auto rhs = gamma_smalldim_oracle<Rational>(c, u);
            EXPECT_TRUE(test_support::tables_equal(lhs, rhs)) << test_support::shape_name(sizes);
        }
    }
    BlockConfig big({6}, {Rational(1)});
    EXPECT_THROW(gamma_smalldim_oracle<Rational>(big, test_support::sample_point(big, 2)), UnsupportedDimension);
}

TEST(Oracles, SmallDimensionSpotValues) {
    // (3,2): Gamma^3_{11} = 2 eps4 (u1 u3 - u2^2 - u3 u4)/(u1-u4)^3
    BlockConfig c({3, 2}, {Rational(1, 3), Rational(1, 2)});
    std::vector<Rational> u{Rational(2), Rational(1), Rational(3), Rational(-1), Rational(4)};
    auto t = gamma_smalldim_oracle<Rational>(c, u);
    Rational d = Rational(2) - Rational(-1);
    Rational expect = Rational(2) * Rational(1, 2) * (Rational(6) - Rational(1) - Rational(-3)) / (d * d * d);
    EXPECT_EQ(t.get(3, 1, 1), expect);

    // (2,2): Gamma^4_{13} = -2 eps1 u4/(u1-u3)^2
    BlockConfig c22({2, 2}, {Rational(2), Rational(3)});
    std::vector<Rational> u22{Rational(1), Rational(1), Rational(4), Rational(2)};
    auto t22 = gamma_smalldim_oracle<Rational>(c22, u22);
    EXPECT_EQ(t22.get(4, 1, 3), Rational(-2) * Rational(2) * Rational(2) / Rational(9));

    // (2,1,1,1): Gamma^5_{55} = 2 eps1/(u1-u5) + eps3/(u3-u5) + eps4/(u4-u5)
    BlockConfig c2111({2, 1, 1, 1}, {Rational(1), Rational(2), Rational(3), Rational(5)});
    std::vector<Rational> u2111{Rational(1), Rational(1), Rational(2), Rational(3), Rational(4)};
    auto t2111 = gamma_smalldim_oracle<Rational>(c2111, u2111);
    EXPECT_EQ(t2111.get(5, 5, 5), Rational(2) / Rational(-3) + Rational(2) / Rational(-2) + Rational(3) / Rational(-1));
}

TEST(Oracles, JetAgreement) {
    // derivative of the closed forms equals derivative of the recursion
    BlockConfig c({3, 2}, test_support::default_weights(2));
    auto pt = test_support::sample_point(c, 77);
    auto coords = lift_point<Jet1>(pt);
    auto lhs = gamma_table<Jet1>(c, coords);
    auto rhs = gamma_smalldim_oracle<Jet1>(c, coords);
    auto keys = Tensor3<Jet1>::key_union(lhs.entries, rhs.entries);
    for (const auto& k : keys)
        EXPECT_EQ(lhs.entries.get(k[0], k[1], k[2]), rhs.entries.get(k[0], k[1], k[2]));
}

TEST(Oracles, NonDescendingShapesViaRelabelling) {
    BlockConfig c({1, 3, 1}, test_support::default_weights(3));
    auto u = test_support::sample_point(c, 53);
    auto lhs = gamma_table(c, u);
    auto rhs = gamma_smalldim_oracle<Rational>(c, u);
    EXPECT_TRUE(test_support::tables_equal(lhs, rhs));
}

} // namespace
} // namespace lauricella
