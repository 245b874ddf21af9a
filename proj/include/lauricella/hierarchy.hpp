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

#ifndef LAURICELLA_HIERARCHY_HPP
#define LAURICELLA_HIERARCHY_HPP

#include <map>
#include <utility>
#include <vector>

#include "lauricella/block_config.hpp"
#include "lauricella/connection.hpp"
#include "lauricella/forms.hpp"
#include "lauricella/poly.hpp"
#include "lauricella/report.hpp"

namespace lauricella {

/// Coordinate expression of the Nijenhuis torsion of a (1,1)-tensor field:
/// N^k_{ij} = L^s_i d_s L^k_j - L^s_j d_s L^k_i - L^k_s (d_i L^s_j - d_j L^s_i),
/// antisymmetric in (i,j). Only nonzero components are returned, keyed
/// {k,i,j} with i < j.
inline std::map<std::array<int, 3>, Poly> nijenhuis_torsion(const PolyMatrix& L) {
    const int n = L.n;
    std::map<std::array<int, 3>, Poly> out;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Poly acc(L.nvars);
                for (int s = 1; s <= n; ++s) {
                    acc += L.at(s, i) * L.at(k, j).partial(s);
                    acc -= L.at(s, j) * L.at(k, i).partial(s);
                    acc -= L.at(k, s) * (L.at(s, j).partial(i) - L.at(s, i).partial(j));
                }
                if (!acc.is_zero()) out[{k, i, j}] = std::move(acc);
            }
    return out;
}

/// (d_L f)_i = L^j_i d_j f.
inline OneForm d_L_function(const Poly& f, const PolyMatrix& L) {
    OneForm w(L.n);
    for (int i = 1; i <= L.n; ++i) {
        Poly acc(L.nvars);
        for (int j = 1; j <= L.n; ++j) acc += L.at(j, i) * f.partial(j);
        w.at(i) = std::move(acc);
    }
    return w;
}

/// (d_L w)_{ij} = L^s_i d_s w_j - L^s_j d_s w_i - w_s (d_i L^s_j - d_j L^s_i).
inline TwoForm d_L_oneform(const OneForm& w, const PolyMatrix& L) {
    const int n = L.n;
    TwoForm r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly acc(L.nvars);
            for (int s = 1; s <= n; ++s) {
                acc += L.at(s, i) * w.at(j).partial(s);
                acc -= L.at(s, j) * w.at(i).partial(s);
                acc -= w.at(s) * (L.at(s, j).partial(i) - L.at(s, i).partial(j));
            }
            r.at(j, i) = -acc;
            r.at(i, j) = std::move(acc);
        }
    return r;
}

/// One bicomplex hierarchy: V_0 = I and V_{k+1} = V_k L - a_k I, with the
/// coefficients a_k produced by integrating d_L a_k - a_k d a_0.
struct FlowSequence {
    PolyMatrix L;
    std::vector<Poly> a;       // a_0..a_N
    std::vector<PolyMatrix> V; // V_0..V_N
};

/// Runs the recursion for N steps. Requires vanishing Nijenhuis torsion of L
/// and d(d_L a0) = 0; each step's 1-form is checked for closedness before
/// integrating (radial primitive, zero at the origin).
inline FlowSequence hierarchy_generate(const PolyMatrix& L, const Poly& a0, int steps) {
    if (!nijenhuis_torsion(L).empty())
        throw TorsionNotZero("hierarchy_generate: operator has nonvanishing torsion");
    OneForm da0 = grad(a0);
    if (!exterior_d(d_L_function(a0, L)).is_zero())
        throw NotClosed("hierarchy_generate: d d_L a0 != 0");

    FlowSequence seq;
    seq.L = L;
    seq.a.push_back(a0);
    seq.V.push_back(PolyMatrix::identity(L.n, L.nvars));
    for (int k = 0; k < steps; ++k) {
        const Poly ak = seq.a.back(); // copy: push_back below reallocates
        OneForm w = d_L_function(ak, L);
        for (int i = 1; i <= L.n; ++i) w.at(i) -= ak * da0.at(i);
        seq.a.push_back(integrate_radial(w)); // throws NotClosed on a broken step
        seq.V.push_back(sub_scalar_identity(seq.V.back() * L, ak));
    }
    return seq;
}

/// The nilpotent shift operator (ones over the diagonal), the classical
/// example of an L that is not a multiplication operator of any
/// configuration; pair it with a_0 = -u^1 (or any multiple of the trace).
inline PolyMatrix shift_operator(int n) {
    PolyMatrix L(n, n);
    for (int i = 1; i < n; ++i) L.at(i, i + 1) = Poly::constant(n, Rational(1));
    return L;
}

/// Checks that every flow in the sequence is a symmetry of the structure:
/// d_nabla V_k = 0 at the point for the configuration's natural connection,
/// and that the V_k commute pairwise as polynomial matrices.
inline VerificationReport flows_are_symmetries(const BlockConfig& cfg, const ChartPoint& point,
                                               const FlowSequence& seq) {
    if (seq.L.n != cfg.dim()) throw ShapeMismatch("flows_are_symmetries: dimension mismatch");
    require_regular(cfg, point);
    auto gamma = gamma_table(cfg, point);
    const int n = cfg.dim();

    VerificationReport report;
    for (std::size_t step = 0; step < seq.V.size(); ++step) {
        ZeroCheck chk("flow_symmetry_step_" + std::to_string(step));
        auto Vj = seq.V[step].eval_scalar(lift_point<Jet1>(point));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    Rational acc = Vj[i - 1][k - 1].d[j - 1] - Vj[i - 1][j - 1].d[k - 1];
                    for (int l = 1; l <= n; ++l) {
                        acc += gamma.get(i, j, l) * Vj[l - 1][k - 1].v;
                        acc -= gamma.get(i, k, l) * Vj[l - 1][j - 1].v;
                    }
                    chk.observe(acc, {i, j, k});
                }
        report.add(chk);
    }

    ZeroCheck comm("flows_commute");
    for (std::size_t p = 0; p < seq.V.size(); ++p)
        for (std::size_t q = p + 1; q < seq.V.size(); ++q) {
            PolyMatrix c = seq.V[p] * seq.V[q] - seq.V[q] * seq.V[p];
            if (!c.is_zero())
                comm.observe(Rational(1), {static_cast<int>(p), static_cast<int>(q)});
        }
    report.add(comm);
    return report;
}

} // namespace lauricella

#endif
