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

#ifndef LAURICELLA_SAMPLING_HPP
#define LAURICELLA_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "lauricella/block_config.hpp"
#include "lauricella/errors.hpp"
#include "lauricella/rational.hpp"

namespace lauricella {

/// splitmix64: tiny deterministic generator, identical across platforms.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [lo, hi] (small ranges only; modulo bias is irrelevant here)
    long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

    /// derive an independent stream (stable fan-out for parallel jobs)
    Rng fork(std::uint64_t salt) const {
        Rng r(state ^ (0x6a09e667f3bcc909ull + salt * 0x9e3779b97f4a7c15ull));
        r.next();
        return r;
    }
};

/// numerators in [-20,20], denominators in [1,5]
inline Rational random_rational(Rng& rng) { return Rational(rng.uniform(-20, 20), rng.uniform(1, 5)); }

inline Rational random_nonzero_rational(Rng& rng) {
    for (;;) {
        Rational r(rng.uniform(-9, 9), rng.uniform(1, 4));
        if (!r.is_zero()) return r;
    }
}

/// Rejection-samples a point that is regular (and, if requested,
/// dual-regular) for the configuration.
inline ChartPoint random_regular_point(const BlockConfig& cfg, Rng& rng, bool dual = false) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ChartPoint u;
        u.reserve(cfg.dim());
        for (int i = 0; i < cfg.dim(); ++i) u.push_back(random_rational(rng));
        if (is_regular(cfg, u, dual)) return u;
    }
    throw Error("random_regular_point: rejection sampling failed");
}

inline std::vector<Rational> random_weights(int blocks, Rng& rng) {
    std::vector<Rational> w;
    w.reserve(blocks);
    for (int b = 0; b < blocks; ++b) w.push_back(random_nonzero_rational(rng));
    return w;
}

/// All ordered compositions (m_1..m_r) with sum d, in lexicographic order of
/// generation (first part outermost). 2^{d-1} of them.
inline std::vector<std::vector<int>> compositions_of(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            cur.push_back(first);
            self(self, rest - first);
            cur.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

/// Compositions of every total 1..max_dim, smaller totals first.
inline std::vector<std::vector<int>> all_compositions_up_to(int max_dim) {
    std::vector<std::vector<int>> out;
    for (int d = 1; d <= max_dim; ++d)
        for (auto& c : compositions_of(d)) out.push_back(std::move(c));
    return out;
}

} // namespace lauricella

#endif
