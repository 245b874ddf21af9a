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

#ifndef LAURICELLA_TSAREV_HPP
#define LAURICELLA_TSAREV_HPP

#include <utility>
#include <vector>

#include "lauricella/errors.hpp"
#include "lauricella/poly.hpp"
#include "lauricella/report.hpp"

namespace lauricella {

/// Diagonal hydrodynamic-type system u^i_t = v^i(u) u^i_x with polynomial
/// characteristic speeds.
struct DiagonalSystem {
    std::vector<Poly> speeds;

    explicit DiagonalSystem(std::vector<Poly> v) : speeds(std::move(v)) {
        for (const auto& p : speeds)
            if (p.nvars() != static_cast<int>(speeds.size()))
                throw ShapeMismatch("DiagonalSystem: speeds must be polynomials in n variables");
    }
    int size() const { return static_cast<int>(speeds.size()); }
};

namespace detail {

inline std::vector<Jet2> lift_speeds(const DiagonalSystem& sys, const ChartPoint& point) {
    std::vector<Jet2> v;
    v.reserve(sys.speeds.size());
    for (const auto& p : sys.speeds) v.push_back(jet_lift2(p, point));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i].v == v[j].v)
                throw CoincidingSpeeds("characteristic speeds coincide at the point");
    return v;
}

} // namespace detail

/// Gamma^i_{ij} = d_j v^i / (v^j - v^i), evaluated exactly.
inline Rational tsarev_symbol(const DiagonalSystem& sys, int i, int j, const ChartPoint& point) {
    if (i == j) throw Error("tsarev_symbol: needs i != j");
    Rational vi = sys.speeds[i - 1].eval(point);
    Rational vj = sys.speeds[j - 1].eval(point);
    if (vi == vj) throw CoincidingSpeeds("characteristic speeds coincide at the point");
    return sys.speeds[i - 1].partial(j).eval(point) / (vj - vi);
}

namespace detail {

/// d_k Gamma^i_{ij} by the quotient rule from second-order jets:
/// [d_k d_j v^i (v^j - v^i) - d_j v^i (d_k v^j - d_k v^i)] / (v^j - v^i)^2.
inline Rational symbol_derivative(const std::vector<Jet2>& v, int i, int j, int k) {
    Rational den = v[j - 1].v - v[i - 1].v;
    return (v[i - 1].hess(j, k) * den - v[i - 1].d[j - 1] * (v[j - 1].d[k - 1] - v[i - 1].d[k - 1])) /
           (den * den);
}

inline Rational symbol_value(const std::vector<Jet2>& v, int i, int j) {
    return v[i - 1].d[j - 1] / (v[j - 1].v - v[i - 1].v);
}

} // namespace detail

/// The integrability residuals of a diagonal system at a point:
///  - semi_hamiltonian: d_j(d_k v^i/(v^k - v^i)) - d_k(d_j v^i/(v^j - v^i))
///  - darboux_tsarev: d_i G^k_{kj} + G^k_{ki} G^k_{kj} - G^k_{kj} G^j_{ji} - G^k_{ki} G^i_{ij}
///  - symbol_derivative_symmetry: d_j G^i_{ik} - d_k G^i_{ij}
///  - tsarev_identity: the algebraic identity tying the previous two to the
///    first; it vanishes for every system.
inline VerificationReport tsarev_residuals(const DiagonalSystem& sys, const ChartPoint& point) {
    const int n = sys.size();
    auto v = detail::lift_speeds(sys, point);

    VerificationReport report;
    {
        ZeroCheck chk("semi_hamiltonian");
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    if (i == j || i == k) continue;
                    chk.observe(detail::symbol_derivative(v, i, k, j) - detail::symbol_derivative(v, i, j, k),
                                {i, j, k});
                }
        report.add(chk);
    }
    {
        ZeroCheck chk("darboux_tsarev");
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j || j == k || i == k) continue;
                    Rational acc = detail::symbol_derivative(v, k, j, i);
                    acc += detail::symbol_value(v, k, i) * detail::symbol_value(v, k, j);
                    acc -= detail::symbol_value(v, k, j) * detail::symbol_value(v, j, i);
                    acc -= detail::symbol_value(v, k, i) * detail::symbol_value(v, i, j);
                    chk.observe(acc, {k, i, j});
                }
        report.add(chk);
    }
    {
        // same content as semi_hamiltonian but assembled through the
        // jet-divided symbols rather than the expanded quotient rule
        ZeroCheck chk("symbol_derivative_symmetry");
        std::vector<Jet1> v1(n, Jet1::constant(Rational(), n));
        for (int i = 0; i < n; ++i) v1[i] = Jet1(v[i].v, v[i].d);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    if (i == j || i == k) continue;
                    // Gamma^i_{ij} as a first-order jet via jet division;
                    // the gradient of d_j v^i is a row of the Hessian
                    Jet1 dvj(v[i - 1].d[j - 1], std::vector<Rational>(n));
                    for (int l = 1; l <= n; ++l) dvj.d[l - 1] = v[i - 1].hess(j, l);
                    Jet1 dvk(v[i - 1].d[k - 1], std::vector<Rational>(n));
                    for (int l = 1; l <= n; ++l) dvk.d[l - 1] = v[i - 1].hess(k, l);
                    Jet1 gij = dvj / (v1[j - 1] - v1[i - 1]);
                    Jet1 gik = dvk / (v1[k - 1] - v1[i - 1]);
                    chk.observe(gik.d[j - 1] - gij.d[k - 1], {i, j, k});
                }
        report.add(chk);
    }
    {
        // LHS - RHS of the identity expressing darboux_tsarev through
        // semi_hamiltonian; it is an identity in v and must always vanish
        ZeroCheck chk("tsarev_identity");
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j || j == k || i == k) continue;
                    Rational lhs = detail::symbol_derivative(v, k, j, i);
                    lhs += detail::symbol_value(v, k, i) * detail::symbol_value(v, k, j);
                    lhs -= detail::symbol_value(v, k, j) * detail::symbol_value(v, j, i);
                    lhs -= detail::symbol_value(v, k, i) * detail::symbol_value(v, i, j);
                    // (v^i - v^k)/(v^j - v^i) [ d_j(d_i v^k/(v^i - v^k)) - d_i(d_j v^k/(v^j - v^k)) ]
                    Rational factor = (v[i - 1].v - v[k - 1].v) / (v[j - 1].v - v[i - 1].v);
                    Rational rhs = factor * (detail::symbol_derivative(v, k, i, j) -
                                             detail::symbol_derivative(v, k, j, i));
                    chk.observe(lhs - rhs, {k, i, j});
                }
        report.add(chk);
    }
    return report;
}

/// Residuals of candidate symmetries (speeds w) and a candidate conserved
/// density h against the system's symbols:
/// symmetry: d_j w^i - G^i_{ij} (w^j - w^i); conservation:
/// d_i d_j h - G^i_{ij} d_i h - G^j_{ji} d_j h, both for all i != j.
inline VerificationReport candidate_residuals(const DiagonalSystem& sys, const std::vector<Poly>& w,
                                              const Poly& h, const ChartPoint& point) {
    const int n = sys.size();
    auto v = detail::lift_speeds(sys, point);

    VerificationReport report;
    {
        ZeroCheck chk("symmetry_residual");
        std::vector<Jet1> wj;
        for (const auto& p : w) wj.push_back(jet_lift1(p, point));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                Rational acc = wj[i - 1].d[j - 1] -
                               detail::symbol_value(v, i, j) * (wj[j - 1].v - wj[i - 1].v);
                chk.observe(acc, {i, j});
            }
        report.add(chk);
    }
    {
        ZeroCheck chk("conservation_residual");
        Jet2 hj = jet_lift2(h, point);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                Rational acc = hj.hess(i, j);
                acc -= detail::symbol_value(v, i, j) * hj.d[i - 1];
                acc -= detail::symbol_value(v, j, i) * hj.d[j - 1];
                chk.observe(acc, {i, j});
            }
        report.add(chk);
    }
    return report;
}

/// Speeds of the weighted diagonal system v^i = u^i - sum_k eps_k u^k.
inline DiagonalSystem epsilon_system(const std::vector<Rational>& eps) {
    const int n = static_cast<int>(eps.size());
    std::vector<Poly> v;
    v.reserve(n);
    Poly a0(n);
    for (int k = 1; k <= n; ++k) a0 += Poly::coordinate(n, k) * eps[k - 1];
    for (int i = 1; i <= n; ++i) v.push_back(Poly::coordinate(n, i) - a0);
    return DiagonalSystem(std::move(v));
}

} // namespace lauricella

#endif
