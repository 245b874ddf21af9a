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

#ifndef LAURICELLA_CONNECTION_HPP
#define LAURICELLA_CONNECTION_HPP

#include <utility>
#include <vector>

#include "lauricella/block_config.hpp"
#include "lauricella/errors.hpp"
#include "lauricella/jet.hpp"
#include "lauricella/tensor.hpp"

namespace lauricella {

/// Christoffel symbols of a connection at one point of one configuration,
/// stored sparsely and symmetric in the lower indices. Scalar kind S is
/// Rational for plain values or Jet1 for values with exact first partials.
template <class S>
struct ChristoffelTable {
    BlockConfig config;
    ChartPoint point;
    Tensor3<S> entries;

    S get(int k, int i, int j) const { return entries.get(k, i, j); }
};

namespace detail {

template <class S>
std::vector<Rational> values_of(const std::vector<S>& coords) {
    std::vector<Rational> v;
    v.reserve(coords.size());
    for (const auto& s : coords) v.push_back(ScalarOps<S>::value(s));
    return v;
}

} // namespace detail

/// Builds the Christoffel symbols of the natural flat connection attached to
/// a block configuration, evaluated on lifted coordinates. The entries fall
/// into four families determined by how the three block labels coincide; all
/// of them reduce to two seed sequences per block:
///
///   g[a][s](t): the symbols with upper index in block a, one lower index at
///   the head of a different block s, and the remaining indices contracted
///   to the (1,1) corner. g(1) = m_s eps_s / (u^{1(a)} - u^{1(s)}) and
///   higher t follow a convolution against the block-a coordinates.
///
///   h[a](t): the intra-block symbols with both lower indices >= 2, all
///   equal to h(k-i-j+4). h(2) = -m_a eps_a / u^{2(a)}; higher t mix h with
///   the first-row sums G[a](t) = -sum_s g[a][s](t).
template <class S>
class GammaBuilder {
  public:
    GammaBuilder(BlockConfig cfg, std::vector<S> coords)
        : cfg_(std::move(cfg)), u_(std::move(coords)), n_(cfg_.dim()) {
        if (static_cast<int>(u_.size()) != n_) throw ShapeMismatch("GammaBuilder: coordinate arity");
        point_ = detail::values_of(u_);
        if (!is_regular(cfg_, point_)) throw NonRegularPoint("GammaBuilder: point is not regular");
        build_seeds();
    }

    const BlockConfig& config() const { return cfg_; }
    const ChartPoint& point() const { return point_; }

    /// g^{(a)}_s(t); zero for t <= 0 or t > m_a.
    S seed(int a, int s, int t) const {
        if (a == s) throw Error("gamma seed: blocks must differ");
        if (t <= 0 || t > cfg_.size_of(a)) return zero();
        return g_[idx(a, s)][t - 1];
    }

    /// G_a(t) = Gamma^{t(a)}_{1(a)1(a)}; zero for t <= 0.
    S first_row(int a, int t) const {
        if (t <= 0 || t > cfg_.size_of(a)) return zero();
        return G_[a - 1][t - 1];
    }

    /// h_a(t) = Gamma^{t(a)}_{2(a)2(a)}; zero for t <= 1.
    S corner(int a, int t) const {
        if (t <= 1 || t > cfg_.size_of(a)) return zero();
        return h_[a - 1][t - 1];
    }

    /// Gamma^{k}_{ij} for flat 1-based indices; exact zero outside the
    /// nonzero families.
    S entry(int k, int i, int j) const {
        auto [gb, kk] = cfg_.block_of(k);
        auto [ab, ii] = cfg_.block_of(i);
        auto [bb, jj] = cfg_.block_of(j);
        if (ab != gb && bb != gb && ab != bb) return zero();
        if (ab == gb && bb == gb) { // intra-block
            if (ii == 1) return first_row(gb, kk - jj + 1);
            if (jj == 1) return first_row(gb, kk - ii + 1);
            int t = kk - ii - jj + 4;
            return corner(gb, t);
        }
        if (ab == bb) { // upper index in a foreign block
            if (ii == 1 && jj == 1) return -seed(gb, ab, kk);
            return zero();
        }
        // upper index shares a block with exactly one lower index
        if (ab == gb) return jj == 1 ? seed(gb, bb, kk - ii + 1) : zero();
        return ii == 1 ? seed(gb, ab, kk - jj + 1) : zero();
    }

    ChristoffelTable<S> table() const {
        Tensor3<S> t(n_);
        for (int k = 1; k <= n_; ++k)
            for (int i = 1; i <= n_; ++i)
                for (int j = i; j <= n_; ++j) {
                    S v = entry(k, i, j);
                    if (!ScalarOps<S>::is_zero(v)) t.set(k, i, j, std::move(v));
                }
        return ChristoffelTable<S>{cfg_, point_, std::move(t)};
    }

  private:
    S zero() const { return ScalarOps<S>::zero(n_); }
    S cst(const Rational& c) const { return ScalarOps<S>::constant(c, n_); }
    const S& coord(int a, int inner) const { return u_[cfg_.flat_index(a, inner) - 1]; }
    int idx(int a, int s) const { return (a - 1) * cfg_.blocks() + (s - 1); }

    void build_seeds() {
        const int r = cfg_.blocks();
        g_.assign(static_cast<std::size_t>(r) * r, {});
        G_.assign(r, {});
        h_.assign(r, {});
        for (int a = 1; a <= r; ++a) {
            const int m = cfg_.size_of(a);
            for (int s = 1; s <= r; ++s) {
                if (s == a) continue;
                auto& g = g_[idx(a, s)];
                g.assign(m, zero());
                S diff = coord(a, 1) - coord(s, 1);
                g[0] = cst(Rational(cfg_.size_of(s)) * cfg_.weight(s)) / diff;
                for (int t = 2; t <= m; ++t) {
                    S acc = zero();
                    for (int q = 2; q <= t; ++q) acc += g[t - q] * coord(a, q); // g(t-q+1)
                    g[t - 1] = -(acc / diff);
                }
            }
            auto& G = G_[a - 1];
            G.assign(m, zero());
            for (int t = 1; t <= m; ++t) {
                S acc = zero();
                for (int s = 1; s <= r; ++s)
                    if (s != a) acc += g_[idx(a, s)][t - 1];
                G[t - 1] = -acc;
            }
            auto& h = h_[a - 1];
            h.assign(m, zero());
            if (m >= 2) {
                h[1] = -(cst(Rational(m) * cfg_.weight(a)) / coord(a, 2));
                for (int t = 3; t <= m; ++t) {
                    S acc = G[t - 3] - h[1] * coord(a, t) / coord(a, 2);
                    // subtract (1/u^{2(a)}) sum_{l=1}^{t-3} (h(l+2) - G(l)) u^{(t-l)(a)}
                    S conv = zero();
                    for (int l = 1; l <= t - 3; ++l) conv += (h[l + 1] - G[l - 1]) * coord(a, t - l);
                    h[t - 1] = acc - conv / coord(a, 2);
                }
            }
        }
    }

    BlockConfig cfg_;
    std::vector<S> u_;
    int n_;
    ChartPoint point_;
    std::vector<std::vector<S>> g_;
    std::vector<std::vector<S>> G_;
    std::vector<std::vector<S>> h_;
};

template <class S>
S gamma_seed(const BlockConfig& cfg, const std::vector<S>& coords, int a, int s, int t) {
    return GammaBuilder<S>(cfg, coords).seed(a, s, t);
}

template <class S>
S gamma_entry(const BlockConfig& cfg, const std::vector<S>& coords, int k, int i, int j) {
    return GammaBuilder<S>(cfg, coords).entry(k, i, j);
}

template <class S>
ChristoffelTable<S> gamma_table(const BlockConfig& cfg, const std::vector<S>& coords) {
    return GammaBuilder<S>(cfg, coords).table();
}

inline ChristoffelTable<Rational> gamma_table(const BlockConfig& cfg, const ChartPoint& point) {
    return gamma_table<Rational>(cfg, point);
}
inline ChristoffelTable<Jet1> gamma_table_jet(const BlockConfig& cfg, const ChartPoint& point) {
    return gamma_table<Jet1>(cfg, lift_point<Jet1>(point));
}

} // namespace lauricella

#endif
