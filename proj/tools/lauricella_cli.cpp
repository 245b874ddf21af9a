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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lauricella/driver.hpp"

namespace {

int emit(const lauricella::CliResult& result) {
    if (!result.out.empty()) std::cout << result.out;
    if (!result.err.empty()) std::cerr << result.err;
    return result.code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bi-flat structures for regular Jordan-block configurations"};
    app.require_subcommand(1);

    std::string config_arg, point_arg, format = "json";
    std::uint64_t seed = 0;
    bool seed_set = false, point_set = false;
    int steps = 4, dim = 0, points = 3, threads = 0;
    bool use_shift = false, want_dual = false;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config)
            cmd->add_option("--config", config_arg, "configuration JSON (inline or a file path)")->required();
        cmd->add_option("--point", point_arg, "point JSON (inline or a file path)")
            ->each([&](const std::string&) { point_set = true; });
        cmd->add_option("--seed", seed, "seed for a generated regular point")
            ->each([&](const std::string&) { seed_set = true; });
        cmd->add_option("--format", format, "output format: json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* gamma = app.add_subcommand("gamma", "Christoffel table of the natural connection");
    add_common(gamma, true);
    gamma->add_flag("--dual", want_dual, "emit the dual connection instead");

    auto* dual = app.add_subcommand("dual", "Christoffel table of the dual connection");
    add_common(dual, true);

    auto* verify = app.add_subcommand("verify", "run every axiom and identity check at a point");
    add_common(verify, true);

    auto* hierarchy = app.add_subcommand("hierarchy", "generate the commuting flow sequence");
    hierarchy->add_option("--config", config_arg, "configuration JSON (inline or a file path)");
    hierarchy->add_option("--steps", steps, "number of recursion steps")->check(CLI::PositiveNumber);
    hierarchy->add_flag("--shift", use_shift, "use the nilpotent shift operator with a0 = -u^1");
    hierarchy->add_option("--dim", dim, "dimension for --shift");
    hierarchy->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* tsarev = app.add_subcommand("tsarev", "integrability residuals of a diagonal system");
    tsarev->add_option("--config", config_arg, "{\"speeds\":[...]} JSON (inline or a file path)")->required();
    tsarev->add_option("--point", point_arg, "point JSON")->each([&](const std::string&) { point_set = true; });
    tsarev->add_option("--seed", seed, "seed for a generated point")->each([&](const std::string&) {
        seed_set = true;
    });
    tsarev->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* sweep = app.add_subcommand("sweep", "verify every configuration up to a dimension bound");
    sweep->add_option("--dim", dim, "max total dimension")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--points", points, "points per configuration")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "sweep seed");
    sweep->add_option("--threads", threads, "worker threads (0 = all cores)");
    sweep->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    std::optional<std::string> point = point_set ? std::optional<std::string>(point_arg) : std::nullopt;
    std::optional<std::uint64_t> seed_opt = seed_set ? std::optional<std::uint64_t>(seed) : std::nullopt;

    using namespace lauricella;
    if (gamma->parsed())
        return emit(want_dual ? cmd_dual(config_arg, point, seed_opt, format)
                              : cmd_gamma(config_arg, point, seed_opt, format));
    if (dual->parsed()) return emit(cmd_dual(config_arg, point, seed_opt, format));
    if (verify->parsed()) return emit(cmd_verify(config_arg, point, seed_opt, format));
    if (hierarchy->parsed()) {
        if (!use_shift && config_arg.empty()) {
            std::cerr << "error: hierarchy needs --config or --shift\n";
            return 2;
        }
        return emit(cmd_hierarchy(config_arg, steps, use_shift, dim, format));
    }
    if (tsarev->parsed()) return emit(cmd_tsarev(config_arg, point, seed_opt, format));
    if (sweep->parsed()) return emit(cmd_sweep(dim, points, seed, threads, format));
    return 2;
}
