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

#ifndef LAURICELLA_DRIVER_HPP
#define LAURICELLA_DRIVER_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "lauricella/dual.hpp"
#include "lauricella/json_io.hpp"
#include "lauricella/sweep.hpp"
#include "lauricella/tsarev.hpp"

namespace lauricella {

/// Outcome of one CLI command: the process exit code, stdout payload and
/// stderr diagnostics. Exit codes: 0 success, 1 a check failed, 2 malformed
/// input or violated precondition.
struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

namespace cli_detail {

inline json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

inline ChartPoint resolve_point(const BlockConfig& cfg, const std::optional<std::string>& point_arg,
                                std::optional<std::uint64_t> seed, bool dual) {
    if (point_arg) {
        ChartPoint u = point_from_json(load_json_arg(*point_arg));
        if (static_cast<int>(u.size()) != cfg.dim())
            throw ParseError("point arity does not match the configuration");
        return u;
    }
    Rng rng(seed.value_or(0));
    return random_regular_point(cfg, rng, dual);
}

inline std::string render_table_text(const ChristoffelTable<Rational>& t, bool dual) {
    std::ostringstream os;
    os << (dual ? "dual connection" : "natural connection") << " at point (";
    for (std::size_t i = 0; i < t.point.size(); ++i) os << (i ? ", " : "") << t.point[i];
    os << ")\n";
    for (const auto& [key, val] : t.entries.entries())
        os << "Gamma" << (dual ? "*" : "") << "^" << key[0] << "_{" << key[1] << "," << key[2]
           << "} = " << val << "\n";
    return os.str();
}

inline std::string render_report_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass) {
            os << "  witness [";
            for (std::size_t i = 0; i < c.witness_indices.size(); ++i)
                os << (i ? "," : "") << c.witness_indices[i];
            os << "] = " << c.witness_value;
        }
        os << "\n";
    }
    return os.str();
}

template <class Fn>
CliResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace cli_detail

inline CliResult cmd_gamma(const std::string& config_arg, const std::optional<std::string>& point_arg,
                           std::optional<std::uint64_t> seed, const std::string& format) {
    return cli_detail::guarded([&]() -> CliResult {
        BlockConfig cfg = config_from_json(cli_detail::load_json_arg(config_arg));
        ChartPoint u = cli_detail::resolve_point(cfg, point_arg, seed, false);
        auto table = gamma_table(cfg, u);
        if (format == "table") return {0, cli_detail::render_table_text(table, false), ""};
        return {0, table_to_json(table).dump(2) + "\n", ""};
    });
}

inline CliResult cmd_dual(const std::string& config_arg, const std::optional<std::string>& point_arg,
                          std::optional<std::uint64_t> seed, const std::string& format) {
    return cli_detail::guarded([&]() -> CliResult {
        BlockConfig cfg = config_from_json(cli_detail::load_json_arg(config_arg));
        ChartPoint u = cli_detail::resolve_point(cfg, point_arg, seed, true);
        auto table = gamma_table(cfg, u);
        auto dual = dual_gamma_closed<Rational>(cfg, u, table);
        if (format == "table") return {0, cli_detail::render_table_text(dual, true), ""};
        json out;
        out["dual"] = true;
        out["table"] = table_to_json(dual);
        return {0, out.dump(2) + "\n", ""};
    });
}

inline CliResult cmd_verify(const std::string& config_arg, const std::optional<std::string>& point_arg,
                            std::optional<std::uint64_t> seed, const std::string& format) {
    return cli_detail::guarded([&]() -> CliResult {
        BlockConfig cfg = config_from_json(cli_detail::load_json_arg(config_arg));
        ChartPoint u = cli_detail::resolve_point(cfg, point_arg, seed, true);
        bool dual_skipped = false;
        VerificationReport rep = verify_all(cfg, u, &dual_skipped);
        CliResult res;
        res.code = rep.all_pass() ? 0 : 1;
        if (dual_skipped) res.err = "warning: point is not dual-regular; dual checks skipped\n";
        res.out = (format == "table") ? cli_detail::render_report_text(rep) : report_to_json(rep).dump(2) + "\n";
        return res;
    });
}

inline CliResult cmd_hierarchy(const std::string& config_arg, int steps, bool use_shift, int shift_dim,
                               const std::string& format) {
    return cli_detail::guarded([&]() -> CliResult {
        FlowSequence seq;
        if (use_shift) {
            if (shift_dim < 1) throw ParseError("hierarchy: --dim must be positive with --shift");
            PolyMatrix L = shift_operator(shift_dim);
            seq = hierarchy_generate(L, -Poly::coordinate(shift_dim, 1), steps);
        } else {
            BlockConfig cfg = config_from_json(cli_detail::load_json_arg(config_arg));
            seq = hierarchy_generate(multiplication_by_euler(cfg), weighted_trace(cfg), steps);
        }
        json out = flow_sequence_to_json(seq);
        if (format == "table") {
            std::ostringstream os;
            for (std::size_t k = 0; k < seq.a.size(); ++k)
                os << "step " << k << ": a has " << seq.a[k].terms().size() << " terms, V is "
                   << seq.V[k].n << "x" << seq.V[k].n << "\n";
            return {0, os.str(), ""};
        }
        return {0, out.dump(2) + "\n", ""};
    });
}

inline CliResult cmd_tsarev(const std::string& speeds_arg, const std::optional<std::string>& point_arg,
                            std::optional<std::uint64_t> seed, const std::string& format) {
    return cli_detail::guarded([&]() -> CliResult {
        json j = cli_detail::load_json_arg(speeds_arg);
        if (!j.is_object() || !j.contains("speeds")) throw ParseError("tsarev: expected {\"speeds\":[...]}");
        const json& sp = j["speeds"];
        const int n = static_cast<int>(sp.size());
        if (n == 0) throw ParseError("tsarev: empty system");
        std::vector<Poly> speeds;
        for (const auto& p : sp) speeds.push_back(poly_from_json(p, n));
        DiagonalSystem sys(std::move(speeds));

        ChartPoint u;
        if (point_arg) {
            u = point_from_json(cli_detail::load_json_arg(*point_arg));
            if (static_cast<int>(u.size()) != n) throw ParseError("point arity does not match the system");
        } else {
            Rng rng(seed.value_or(0));
            bool found = false;
            for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
                ChartPoint cand;
                for (int i = 0; i < n; ++i) cand.push_back(random_rational(rng));
                found = true;
                for (int a = 0; a < n && found; ++a)
                    for (int b = a + 1; b < n && found; ++b)
                        if (sys.speeds[a].eval(cand) == sys.speeds[b].eval(cand)) found = false;
                if (found) u = std::move(cand);
            }
            if (!found) throw Error("tsarev: could not sample a point with distinct speeds");
        }

        VerificationReport rep = tsarev_residuals(sys, u);
        CliResult res;
        res.code = rep.all_pass() ? 0 : 1;
        res.out = (format == "table") ? cli_detail::render_report_text(rep) : report_to_json(rep).dump(2) + "\n";
        return res;
    });
}

inline CliResult cmd_sweep(int max_dim, int points, std::uint64_t seed, int threads,
                           const std::string& format) {
    return cli_detail::guarded([&]() -> CliResult {
        SweepOptions opt;
        opt.max_dim = max_dim;
        opt.points_per_config = points;
        opt.seed = seed;
        opt.threads = threads;
        SweepResult result = run_sweep(opt);
        CliResult res;
        res.code = result.all_pass ? 0 : 1;
        if (format == "table") {
            std::ostringstream os;
            os << "configurations: " << result.summary["configurations"] << "\n"
               << "total checks:   " << result.summary["total_checks"] << "\n"
               << "failures:       " << result.summary["total_failures"] << "\n"
               << (result.all_pass ? "ALL PASS\n" : "FAILURES PRESENT\n");
            res.out = os.str();
        } else {
            res.out = result.summary.dump(2) + "\n";
        }
        return res;
    });
}

} // namespace lauricella

#endif
