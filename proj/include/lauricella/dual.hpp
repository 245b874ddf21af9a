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

#ifndef LAURICELLA_DUAL_HPP
#define LAURICELLA_DUAL_HPP

#include <utility>
#include <vector>

#include "lauricella/block_config.hpp"
#include "lauricella/connection.hpp"
#include "lauricella/tensor.hpp"

namespace lauricella {

namespace detail {

template <class S>
void require_dual_regular_values(const BlockConfig& cfg, const std::vector<S>& coords) {
    for (int b = 1; b <= cfg.blocks(); ++b)
        if (ScalarOps<S>::value(coords[cfg.flat_index(b, 1) - 1]).is_zero())
            throw NonInvertibleEuler("a block eigenvalue vanishes; E has no inverse here");
}

} // namespace detail

/// Components of E^{-1} (the inverse of the Euler field under the product):
/// blockwise (E^{-1})^{1(b)} = 1/u^{1(b)} and
/// (E^{-1})^{(k+1)(b)} = -(1/u^{1(b)}) sum_{s=1}^{k} (E^{-1})^{(k-s+1)(b)} u^{(s+1)(b)}.
template <class S>
std::vector<S> euler_inverse(const BlockConfig& cfg, const std::vector<S>& coords) {
    detail::require_dual_regular_values(cfg, coords);
    const int n = cfg.dim();
    std::vector<S> inv(n, ScalarOps<S>::zero(n));
    for (int b = 1; b <= cfg.blocks(); ++b) {
        const int m = cfg.size_of(b);
        const S& head = coords[cfg.flat_index(b, 1) - 1];
        inv[cfg.flat_index(b, 1) - 1] = ScalarOps<S>::constant(Rational(1), n) / head;
        for (int k = 1; k < m; ++k) {
            S acc = ScalarOps<S>::zero(n);
            for (int s = 1; s <= k; ++s)
                acc += inv[cfg.flat_index(b, k - s + 1) - 1] * coords[cfg.flat_index(b, s + 1) - 1];
            inv[cfg.flat_index(b, k + 1) - 1] = -(acc / head);
        }
    }
    return inv;
}

/// Dual product c*^{i(a)}_{j(b)k(g)} = delta^a_b delta^a_g (E^{-1})^{(i-j-k+2)(a)}.
template <class S>
Tensor3<S> dual_product(const BlockConfig& cfg, const std::vector<S>& coords) {
    auto inv = euler_inverse(cfg, coords);
    const int n = cfg.dim();
    Tensor3<S> c(n);
    for (int b = 1; b <= cfg.blocks(); ++b) {
        const int m = cfg.size_of(b);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                for (int k = j; k <= m; ++k) {
                    int t = i - j - k + 2;
                    if (t < 1 || t > m) continue;
                    c.set(cfg.flat_index(b, i), cfg.flat_index(b, j), cfg.flat_index(b, k),
                          inv[cfg.flat_index(b, t) - 1]);
                }
    }
    return c;
}

/// Dual Christoffel symbols by the closed correction of the natural ones:
/// an intra-block correction proportional to (E^{-1})^{(k-i-j+2)(a)} with a
/// constant depending on whether k = 1, plus the head correction
/// -m_b eps_b / u^{1(b)} on Gamma*^{1(a)}_{1(b)1(b)} for b != a.
template <class S>
ChristoffelTable<S> dual_gamma_closed(const BlockConfig& cfg, const std::vector<S>& coords,
                                      const ChristoffelTable<S>& gamma) {
    detail::require_dual_regular_values(cfg, coords);
    auto inv = euler_inverse(cfg, coords);
    const int n = cfg.dim();
    Rational total;
    for (int b = 1; b <= cfg.blocks(); ++b) total += Rational(cfg.size_of(b)) * cfg.weight(b);

    Tensor3<S> out = gamma.entries;
    for (int a = 1; a <= cfg.blocks(); ++a) {
        const int m = cfg.size_of(a);
        Rational head_c = Rational(1) - (total - Rational(m) * cfg.weight(a)); // k = 1
        Rational tail_c = Rational(1) - total;                                 // k >= 2
        for (int k = 1; k <= m; ++k)
            for (int i = 1; i <= m; ++i)
                for (int j = i; j <= m; ++j) {
                    int t = k - i - j + 2;
                    if (t < 1 || t > m) continue;
                    S corr = inv[cfg.flat_index(a, t) - 1] *
                             ScalarOps<S>::constant(k == 1 ? head_c : tail_c, n);
                    out.add(cfg.flat_index(a, k), cfg.flat_index(a, i), cfg.flat_index(a, j), -corr);
                }
        for (int b = 1; b <= cfg.blocks(); ++b) {
            if (b == a) continue;
            S corr = ScalarOps<S>::constant(Rational(cfg.size_of(b)) * cfg.weight(b), n) /
                     coords[cfg.flat_index(b, 1) - 1];
            out.add(cfg.flat_index(a, 1), cfg.flat_index(b, 1), cfg.flat_index(b, 1), -corr);
        }
    }
    return ChristoffelTable<S>{cfg, gamma.point, std::move(out)};
}

/// Independent route to the dual connection:
/// Gamma*^k_{ij} = Gamma^k_{ij} - sum_l c*^l_{ji} nabla_l E^k with
/// nabla_l E^k = delta^k_l + sum_s Gamma^k_{ls} u^s computed from the table.
template <class S>
ChristoffelTable<S> dual_gamma_generic(const BlockConfig& cfg, const std::vector<S>& coords,
                                       const ChristoffelTable<S>& gamma) {
    detail::require_dual_regular_values(cfg, coords);
    const int n = cfg.dim();
    auto cstar = dual_product(cfg, coords);

    std::vector<std::vector<S>> nablaE(n, std::vector<S>(n, ScalarOps<S>::zero(n)));
    for (int l = 1; l <= n; ++l)
        for (int k = 1; k <= n; ++k) {
            S acc = ScalarOps<S>::constant(k == l ? Rational(1) : Rational(0), n);
            for (int s = 1; s <= n; ++s) acc += gamma.get(k, l, s) * coords[s - 1];
            nablaE[l - 1][k - 1] = std::move(acc);
        }

    Tensor3<S> out = gamma.entries;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            auto [bi, ii] = cfg.block_of(i);
            auto [bj, jj] = cfg.block_of(j);
            if (bi != bj) continue; // c*^l_{ji} vanishes unless i, j share a block
            for (int k = 1; k <= n; ++k) {
                S acc = ScalarOps<S>::zero(n);
                for (int lt = 1; lt <= cfg.size_of(bi); ++lt) {
                    int l = cfg.flat_index(bi, lt);
                    S cs = cstar.get(l, j, i);
                    if (ScalarOps<S>::is_zero(cs)) continue;
                    acc += cs * nablaE[l - 1][k - 1];
                }
                out.add(k, i, j, -acc);
            }
        }
    return ChristoffelTable<S>{cfg, gamma.point, std::move(out)};
}

/// Single-block closed form of the dual connection, used as a third route in
/// tests: Gamma*^k_{ij} = Gamma^k_{ij} + (e-1)(E^{-1})^{k-i-j+2}
/// - e (E^{-1})^1 delta^k_1 delta^1_i delta^1_j with e = m eps_1.
template <class S>
ChristoffelTable<S> dual_gamma_single_block_oracle(const BlockConfig& cfg, const std::vector<S>& coords,
                                                   const ChristoffelTable<S>& gamma) {
    if (cfg.blocks() != 1) throw NotSingleBlock("dual single-block oracle: one block only");
    detail::require_dual_regular_values(cfg, coords);
    auto inv = euler_inverse(cfg, coords);
    const int m = cfg.dim();
    Rational eps = Rational(m) * cfg.weight(1);
    Tensor3<S> out = gamma.entries;
    for (int k = 1; k <= m; ++k)
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
                int t = k - i - j + 2;
                if (t >= 1 && t <= m)
                    out.add(k, i, j, inv[t - 1] * ScalarOps<S>::constant(eps - Rational(1), m));
            }
    out.add(1, 1, 1, -(inv[0] * ScalarOps<S>::constant(eps, m)));
    return ChristoffelTable<S>{cfg, gamma.point, std::move(out)};
}

} // namespace lauricella

#endif
