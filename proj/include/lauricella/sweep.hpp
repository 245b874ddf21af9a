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

#ifndef LAURICELLA_SWEEP_HPP
#define LAURICELLA_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <vector>

#include "lauricella/closed_form_tables.hpp"
#include "lauricella/json_io.hpp"
#include "lauricella/sampling.hpp"
#include "lauricella/verify.hpp"

namespace lauricella {

struct SweepOptions {
    int max_dim = 6;
    int points_per_config = 3;
    std::uint64_t seed = 1;
    int threads = 0; // 0 = hardware concurrency
};

inline constexpr int kSweepDimensionCap = 8;

namespace detail {

struct SweepJob {
    int index;
    BlockConfig cfg;
};

/// One configuration's verdict: the merged suites at every sampled point,
/// the oracle cross-checks, and the block-relabelling invariance assertion.
inline VerificationReport sweep_config(const BlockConfig& cfg, int points, Rng rng) {
    VerificationReport out;
    for (int p = 0; p < points; ++p) {
        ChartPoint u = random_regular_point(cfg, rng, /*dual=*/true);
        out.append(verify_all(cfg, u));

        // oracle triangulation where a closed form is available
        {
            ZeroCheck chk("oracle_agreement");
            auto table = gamma_table(cfg, u);
            auto compare = [&](const ChristoffelTable<Rational>& oracle) {
                auto keys = Tensor3<Rational>::key_union(table.entries, oracle.entries);
                for (const auto& key : keys)
                    chk.observe(table.entries.get(key[0], key[1], key[2]) -
                                    oracle.entries.get(key[0], key[1], key[2]),
                                {key[0], key[1], key[2]});
            };
            if (cfg.dim() <= 5) compare(gamma_smalldim_oracle<Rational>(cfg, u));
            if (cfg.blocks() == 1) compare(gamma_single_block_oracle<Rational>(cfg, u));
            if (cfg.all_blocks_size_one()) compare(gamma_semisimple_oracle<Rational>(cfg, u));
            out.add(chk);
        }

        // relabelled configurations must produce relabelled tables
        {
            ZeroCheck chk("relabelling_invariance");
            const int r = cfg.blocks();
            std::vector<int> order(r);
            std::iota(order.begin(), order.end(), 1);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return cfg.size_of(a) > cfg.size_of(b); });
            std::vector<int> perm(r);
            for (int pos = 1; pos <= r; ++pos) perm[order[pos - 1] - 1] = pos;
            BlockRelabelling rel(cfg, perm);
            auto mapped = gamma_table(rel.target, rel.map_point(u));
            auto transported = rel.map_tensor(gamma_table(cfg, u).entries);
            auto keys = Tensor3<Rational>::key_union(mapped.entries, transported);
            for (const auto& key : keys)
                chk.observe(mapped.entries.get(key[0], key[1], key[2]) -
                                transported.get(key[0], key[1], key[2]),
                            {key[0], key[1], key[2]});
            out.add(chk);
        }
    }
    return out;
}

} // namespace detail

struct SweepResult {
    json summary;
    bool all_pass = false;
};

/// Enumerates every block composition of every total dimension <= max_dim,
/// draws random weights and dual-regular points per configuration, runs the
/// full suites, and merges the per-configuration verdicts deterministically
/// by job index. Jobs fan out over a small worker pool.
inline SweepResult run_sweep(const SweepOptions& opt) {
    if (opt.max_dim < 1 || opt.max_dim > kSweepDimensionCap)
        throw Error("run_sweep: dimension bound out of range");

    std::vector<detail::SweepJob> jobs;
    Rng seed_rng(opt.seed);
    {
        int index = 0;
        for (const auto& sizes : all_compositions_up_to(opt.max_dim)) {
            Rng cfg_rng = seed_rng.fork(static_cast<std::uint64_t>(index));
            BlockConfig cfg(sizes, random_weights(static_cast<int>(sizes.size()), cfg_rng));
            jobs.push_back({index, std::move(cfg)});
            ++index;
        }
    }

    std::vector<VerificationReport> reports(jobs.size());
    int workers = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            std::size_t at = cursor.fetch_add(1);
            if (at >= jobs.size()) return;
            Rng rng = Rng(opt.seed).fork(static_cast<std::uint64_t>(jobs[at].index)).fork(0x706f696e74);
            reports[at] = detail::sweep_config(jobs[at].cfg, opt.points_per_config, rng);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    json configs = json::array();
    long total_checks = 0, total_failures = 0;
    for (std::size_t at = 0; at < jobs.size(); ++at) {
        const auto& rep = reports[at];
        json failures = json::array();
        int passed = 0;
        for (const auto& c : rep.checks) {
            if (c.pass) {
                ++passed;
                continue;
            }
            json f;
            f["check"] = c.name;
            f["indices"] = c.witness_indices;
            f["value"] = c.witness_value.str();
            failures.push_back(std::move(f));
        }
        total_checks += static_cast<long>(rep.checks.size());
        total_failures += static_cast<long>(rep.checks.size()) - passed;
        json cj;
        cj["config"] = config_to_json(jobs[at].cfg);
        cj["checks_passed"] = passed;
        cj["failures"] = std::move(failures);
        configs.push_back(std::move(cj));
    }

    SweepResult result;
    result.all_pass = total_failures == 0;
    result.summary["max_dim"] = opt.max_dim;
    result.summary["points_per_config"] = opt.points_per_config;
    result.summary["seed"] = opt.seed;
    result.summary["configurations"] = static_cast<long>(jobs.size());
    result.summary["total_checks"] = total_checks;
    result.summary["total_failures"] = total_failures;
    result.summary["all_pass"] = result.all_pass;
    result.summary["configs"] = std::move(configs);
    return result;
}

} // namespace lauricella

#endif
