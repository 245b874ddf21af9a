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

#ifndef LAURICELLA_REPORT_HPP
#define LAURICELLA_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "lauricella/rational.hpp"

namespace lauricella {

/// One named exact-zero check: pass iff every observed value was exactly 0.
/// Keeps the offending index tuple with the largest |value| as witness.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::vector<int> witness_indices;
    Rational witness_value;
};

class ZeroCheck {
  public:
    explicit ZeroCheck(std::string name) : r_{std::move(name), true, {}, Rational()} {}

    void observe(const Rational& value, std::vector<int> indices) {
        if (value.is_zero()) return;
        if (r_.pass || abs(value) > abs(r_.witness_value)) {
            r_.witness_indices = std::move(indices);
            r_.witness_value = value;
        }
        r_.pass = false;
    }

    const CheckResult& result() const { return r_; }

  private:
    CheckResult r_;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void add(const ZeroCheck& z) { checks.push_back(z.result()); }
    void append(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace lauricella

#endif
