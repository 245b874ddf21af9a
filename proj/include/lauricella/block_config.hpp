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

#ifndef LAURICELLA_BLOCK_CONFIG_HPP
#define LAURICELLA_BLOCK_CONFIG_HPP

#include <numeric>
#include <utility>
#include <vector>

#include "lauricella/errors.hpp"
#include "lauricella/poly.hpp"
#include "lauricella/rational.hpp"
#include "lauricella/tensor.hpp"

namespace lauricella {

using ChartPoint = std::vector<Rational>;

/// A regular Jordan-block configuration: ordered block sizes m_1..m_r with a
/// rational weight per block. Everything else in the library is derived from
/// this seed.
struct BlockConfig {
    std::vector<int> sizes;
    std::vector<Rational> weights;

    BlockConfig() = default;
    BlockConfig(std::vector<int> s, std::vector<Rational> w) : sizes(std::move(s)), weights(std::move(w)) {
        if (sizes.empty()) throw Error("BlockConfig: needs at least one block");
        for (int m : sizes)
            if (m < 1) throw Error("BlockConfig: block sizes must be positive");
        if (weights.size() != sizes.size()) throw Error("BlockConfig: one weight per block");
    }

    int blocks() const { return static_cast<int>(sizes.size()); }
    int dim() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
    int size_of(int block) const { return sizes[block - 1]; }
    const Rational& weight(int block) const { return weights[block - 1]; }

    /// j(alpha) = m_1 + ... + m_{alpha-1} + j (all 1-based).
    int flat_index(int block, int inner) const {
        if (block < 1 || block > blocks() || inner < 1 || inner > sizes[block - 1])
            throw IndexOutOfRange("BlockConfig::flat_index: out of range");
        int off = 0;
        for (int b = 1; b < block; ++b) off += sizes[b - 1];
        return off + inner;
    }

    /// Inverse of flat_index.
    std::pair<int, int> block_of(int flat) const {
        if (flat < 1 || flat > dim()) throw IndexOutOfRange("BlockConfig::block_of: out of range");
        int b = 1;
        while (flat > sizes[b - 1]) {
            flat -= sizes[b - 1];
            ++b;
        }
        return {b, flat};
    }

    bool all_blocks_size_one() const {
        for (int m : sizes)
            if (m != 1) return false;
        return true;
    }

    friend bool operator==(const BlockConfig& a, const BlockConfig& b) {
        return a.sizes == b.sizes && a.weights == b.weights;
    }
};

/// e^i = 1 iff i is the first coordinate of some block.
inline std::vector<Rational> unit_vector_field(const BlockConfig& cfg) {
    std::vector<Rational> e(cfg.dim());
    for (int b = 1; b <= cfg.blocks(); ++b) e[cfg.flat_index(b, 1) - 1] = Rational(1);
    return e;
}

/// E^i = u^i.
inline std::vector<Poly> euler_vector_field(const BlockConfig& cfg) {
    const int n = cfg.dim();
    std::vector<Poly> E;
    E.reserve(n);
    for (int i = 1; i <= n; ++i) E.push_back(Poly::coordinate(n, i));
    return E;
}

/// Structure constants of the product in canonical coordinates:
/// c^{k(g)}_{i(a)j(b)} = delta^g_a delta^g_b delta^k_{i+j-1}, dropped when
/// i+j-1 exceeds the block size.
inline Tensor3<Rational> product_structure(const BlockConfig& cfg) {
    Tensor3<Rational> c(cfg.dim());
    for (int b = 1; b <= cfg.blocks(); ++b) {
        const int m = cfg.size_of(b);
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) {
                if (i + j - 1 > m) continue;
                c.set(cfg.flat_index(b, i + j - 1), cfg.flat_index(b, i), cfg.flat_index(b, j), Rational(1));
            }
    }
    return c;
}

/// L = E o : block-diagonal, each block lower-triangular Toeplitz with
/// (L_b)_{jk} = u^{(j-k+1)(b)} for j >= k.
inline PolyMatrix multiplication_by_euler(const BlockConfig& cfg) {
    const int n = cfg.dim();
    PolyMatrix L(n, n);
    for (int b = 1; b <= cfg.blocks(); ++b) {
        const int m = cfg.size_of(b);
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= j; ++k)
                L.at(cfg.flat_index(b, j), cfg.flat_index(b, k)) =
                    Poly::coordinate(n, cfg.flat_index(b, j - k + 1));
    }
    return L;
}

/// a_0 = sum_b m_b eps_b u^{1(b)}, the weighted sum of block traces.
inline Poly weighted_trace(const BlockConfig& cfg) {
    const int n = cfg.dim();
    Poly a0(n);
    for (int b = 1; b <= cfg.blocks(); ++b)
        a0 += Poly::coordinate(n, cfg.flat_index(b, 1)) * (Rational(cfg.size_of(b)) * cfg.weight(b));
    return a0;
}

/// Regularity: u^{2(b)} != 0 for every block of size >= 2 and pairwise
/// distinct block eigenvalues u^{1(b)}. The dual flag additionally requires
/// every eigenvalue to be nonzero.
inline bool is_regular(const BlockConfig& cfg, const ChartPoint& u, bool dual = false) {
    if (static_cast<int>(u.size()) != cfg.dim()) throw ShapeMismatch("is_regular: point arity");
    for (int b = 1; b <= cfg.blocks(); ++b) {
        if (cfg.size_of(b) >= 2 && u[cfg.flat_index(b, 2) - 1].is_zero()) return false;
        if (dual && u[cfg.flat_index(b, 1) - 1].is_zero()) return false;
        for (int b2 = b + 1; b2 <= cfg.blocks(); ++b2)
            if (u[cfg.flat_index(b, 1) - 1] == u[cfg.flat_index(b2, 1) - 1]) return false;
    }
    return true;
}

inline void require_regular(const BlockConfig& cfg, const ChartPoint& u, bool dual = false) {
    if (!is_regular(cfg, u, false)) throw NonRegularPoint("point is not regular for this configuration");
    if (dual && !is_regular(cfg, u, true))
        throw NonInvertibleEuler("point has a vanishing block eigenvalue; E is not invertible");
}

/// Relabelling of blocks: perm[a-1] = target position of source block a.
/// Transports configs, points and index triples between the two labellings.
struct BlockRelabelling {
    BlockConfig source;
    std::vector<int> perm; // 1-based targets
    BlockConfig target;

    BlockRelabelling(BlockConfig cfg, std::vector<int> p) : source(std::move(cfg)), perm(std::move(p)) {
        const int r = source.blocks();
        std::vector<int> ts(r);
        std::vector<Rational> tw(r);
        for (int a = 1; a <= r; ++a) {
            ts[perm[a - 1] - 1] = source.size_of(a);
            tw[perm[a - 1] - 1] = source.weight(a);
        }
        target = BlockConfig(std::move(ts), std::move(tw));
    }

    int map_flat(int i) const {
        auto [b, inner] = source.block_of(i);
        return target.flat_index(perm[b - 1], inner);
    }
    ChartPoint map_point(const ChartPoint& u) const {
        ChartPoint v(u.size());
        for (int i = 1; i <= static_cast<int>(u.size()); ++i) v[map_flat(i) - 1] = u[i - 1];
        return v;
    }
    /// Permutes index keys only; scalar values are carried over untouched
    /// (jet partials stay expressed in the caller's variable order).
    template <class S>
    Tensor3<S> map_tensor(const Tensor3<S>& t) const {
        Tensor3<S> out(t.dim());
        for (const auto& [key, val] : t.entries())
            out.set(map_flat(key[0]), map_flat(key[1]), map_flat(key[2]), val);
        return out;
    }

    BlockRelabelling inverse() const {
        std::vector<int> inv(perm.size());
        for (int a = 1; a <= static_cast<int>(perm.size()); ++a) inv[perm[a - 1] - 1] = a;
        return BlockRelabelling(target, std::move(inv));
    }
};

} // namespace lauricella

#endif
