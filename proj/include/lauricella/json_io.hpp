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

#ifndef LAURICELLA_JSON_IO_HPP
#define LAURICELLA_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lauricella/block_config.hpp"
#include "lauricella/connection.hpp"
#include "lauricella/hierarchy.hpp"
#include "lauricella/report.hpp"

namespace lauricella {

using nlohmann::json;

// All numeric payloads travel as "p/q" strings (exact, arbitrary precision).

inline json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

inline json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["coeff"] = c.str();
        t["exps"] = e;
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Poly poly_from_json(const json& j, int nvars) {
    if (!j.is_array()) throw ParseError("polynomial: expected a list of terms");
    Poly p(nvars);
    for (const auto& t : j) {
        if (!t.contains("coeff") || !t.contains("exps")) throw ParseError("polynomial term needs coeff and exps");
        std::vector<int> e = t["exps"].get<std::vector<int>>();
        if (static_cast<int>(e.size()) != nvars) throw ParseError("polynomial term arity mismatch");
        p.add_term(std::move(e), rational_from_json(t["coeff"]));
    }
    return p;
}

inline json config_to_json(const BlockConfig& cfg) {
    json j;
    j["sizes"] = cfg.sizes;
    json w = json::array();
    for (const auto& x : cfg.weights) w.push_back(x.str());
    j["weights"] = std::move(w);
    return j;
}

inline BlockConfig config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sizes") || !j.contains("weights"))
        throw ParseError("configuration needs {\"sizes\":[...], \"weights\":[...]}");
    std::vector<int> sizes = j["sizes"].get<std::vector<int>>();
    std::vector<Rational> weights;
    for (const auto& w : j["weights"]) weights.push_back(rational_from_json(w));
    try {
        return BlockConfig(std::move(sizes), std::move(weights));
    } catch (const Error& e) {
        throw ParseError(std::string("bad configuration: ") + e.what());
    }
}

inline json point_to_json(const ChartPoint& u) {
    json c = json::array();
    for (const auto& x : u) c.push_back(x.str());
    json j;
    j["coords"] = std::move(c);
    return j;
}

/// Accepts either {"coords":[...]} or a bare array of "p/q" strings.
inline ChartPoint point_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("coords"))
        arr = &j["coords"];
    else
        throw ParseError("point: expected {\"coords\":[...]} or a bare array");
    ChartPoint u;
    for (const auto& x : *arr) u.push_back(rational_from_json(x));
    return u;
}

/// Nonzero entries only, lower indices with i <= j.
inline json table_to_json(const ChristoffelTable<Rational>& t) {
    json out = json::array();
    for (const auto& [key, val] : t.entries.entries()) {
        json e;
        e["k"] = key[0];
        e["i"] = key[1];
        e["j"] = key[2];
        e["value"] = val.str();
        out.push_back(std::move(e));
    }
    return out;
}

inline json report_to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        json w;
        w["indices"] = c.witness_indices;
        w["value"] = c.witness_value.str();
        j["witness"] = std::move(w);
        checks.push_back(std::move(j));
    }
    json out;
    out["checks"] = std::move(checks);
    return out;
}

inline json flow_sequence_to_json(const FlowSequence& seq) {
    json steps = json::array();
    for (std::size_t k = 0; k < seq.a.size(); ++k) {
        json s;
        s["step"] = k;
        s["a"] = poly_to_json(seq.a[k]);
        json rows = json::array();
        for (int i = 1; i <= seq.V[k].n; ++i) {
            json row = json::array();
            for (int j = 1; j <= seq.V[k].n; ++j) row.push_back(poly_to_json(seq.V[k].at(i, j)));
            rows.push_back(std::move(row));
        }
        s["V"] = std::move(rows);
        steps.push_back(std::move(s));
    }
    json out;
    out["steps"] = std::move(steps);
    return out;
}

} // namespace lauricella

#endif
