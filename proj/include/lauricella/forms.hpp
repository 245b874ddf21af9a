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

#ifndef LAURICELLA_FORMS_HPP
#define LAURICELLA_FORMS_HPP

#include <numeric>
#include <utility>
#include <vector>

#include "lauricella/errors.hpp"
#include "lauricella/poly.hpp"

namespace lauricella {

/// Polynomial 1-form: omega = sum_i comp[i-1] du^i.
struct OneForm {
    std::vector<Poly> comp;

    OneForm() = default;
    explicit OneForm(int nvars) : comp(nvars, Poly(nvars)) {}
    explicit OneForm(std::vector<Poly> c) : comp(std::move(c)) {}

    int nvars() const { return static_cast<int>(comp.size()); }
    const Poly& at(int i) const { return comp[i - 1]; }
    Poly& at(int i) { return comp[i - 1]; }

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }

    friend OneForm operator-(OneForm a, const OneForm& b) {
        if (a.nvars() != b.nvars()) throw ShapeMismatch("OneForm: arity mismatch");
        for (int i = 0; i < a.nvars(); ++i) a.comp[i] -= b.comp[i];
        return a;
    }
    friend OneForm operator+(OneForm a, const OneForm& b) {
        if (a.nvars() != b.nvars()) throw ShapeMismatch("OneForm: arity mismatch");
        for (int i = 0; i < a.nvars(); ++i) a.comp[i] += b.comp[i];
        return a;
    }
    friend bool operator==(const OneForm& a, const OneForm& b) { return a.comp == b.comp; }
};

/// Polynomial 2-form stored as the full antisymmetric matrix of components.
struct TwoForm {
    int n = 0;
    std::vector<Poly> comp; // row-major n*n

    TwoForm() = default;
    explicit TwoForm(int nvars) : n(nvars), comp(static_cast<std::size_t>(nvars) * nvars, Poly(nvars)) {}

    const Poly& at(int i, int j) const { return comp[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
    Poly& at(int i, int j) { return comp[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }
    friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.n == b.n && a.comp == b.comp; }
    friend TwoForm operator+(TwoForm a, const TwoForm& b) {
        if (a.n != b.n) throw ShapeMismatch("TwoForm: arity mismatch");
        for (std::size_t i = 0; i < a.comp.size(); ++i) a.comp[i] += b.comp[i];
        return a;
    }
};

inline OneForm grad(const Poly& p) {
    OneForm w(p.nvars());
    for (int i = 1; i <= p.nvars(); ++i) w.at(i) = p.partial(i);
    return w;
}

/// (d omega)_{ij} = d_i omega_j - d_j omega_i.
inline TwoForm exterior_d(const OneForm& w) {
    const int n = w.nvars();
    TwoForm r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly v = w.at(j).partial(i) - w.at(i).partial(j);
            r.at(j, i) = -v;
            r.at(i, j) = std::move(v);
        }
    return r;
}

/// Inverts d on closed polynomial 1-forms by the radial homotopy: every
/// degree-d monomial of sum_i omega_i u^i contributes itself divided by d.
/// The primitive is normalized by a(0) = 0.
inline Poly integrate_radial(const OneForm& w) {
    if (!exterior_d(w).is_zero()) throw NotClosed("integrate_radial: form is not closed");
    const int n = w.nvars();
    Poly radial(n);
    for (int i = 1; i <= n; ++i) radial += w.at(i) * Poly::coordinate(n, i);
    Poly out(n);
    for (const auto& [e, c] : radial.terms()) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        out.add_term(e, c / Rational(deg));
    }
    return out;
}

} // namespace lauricella

#endif
