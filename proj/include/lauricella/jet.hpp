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

#ifndef LAURICELLA_JET_HPP
#define LAURICELLA_JET_HPP

#include <cassert>
#include <cstddef>
#include <ostream>
#include <vector>

#include "lauricella/errors.hpp"
#include "lauricella/rational.hpp"

namespace lauricella {

/// First-order forward-mode jet: an exact value together with its exact
/// partial derivatives with respect to u^1..u^n. Arithmetic propagates the
/// product and quotient rules with no rounding.
struct Jet1 {
    Rational v;
    std::vector<Rational> d; // d[i-1] = d/du^i

    Jet1() = default;
    Jet1(Rational value, std::vector<Rational> partials) : v(std::move(value)), d(std::move(partials)) {}

    static Jet1 constant(const Rational& c, int n) { return Jet1(c, std::vector<Rational>(n)); }

    /// The lift of the coordinate function u^i (1-based) at a point value.
    static Jet1 coordinate(const Rational& value, int n, int i) {
        Jet1 j = constant(value, n);
        j.d[i - 1] = Rational(1);
        return j;
    }

    int vars() const { return static_cast<int>(d.size()); }

    bool is_zero() const {
        if (!v.is_zero()) return false;
        for (const auto& x : d)
            if (!x.is_zero()) return false;
        return true;
    }

    Jet1& operator+=(const Jet1& o) {
        assert(d.size() == o.d.size());
        v += o.v;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
        return *this;
    }
    Jet1& operator-=(const Jet1& o) {
        assert(d.size() == o.d.size());
        v -= o.v;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
        return *this;
    }
    Jet1& operator*=(const Jet1& o) {
        assert(d.size() == o.d.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = v * o.d[i] + d[i] * o.v;
        v *= o.v;
        return *this;
    }
    Jet1& operator/=(const Jet1& o) {
        assert(d.size() == o.d.size());
        if (o.v.is_zero()) throw Error("Jet1: division by zero value");
        v /= o.v;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = (d[i] - v * o.d[i]) / o.v;
        return *this;
    }

    Jet1& operator*=(const Rational& c) {
        v *= c;
        for (auto& x : d) x *= c;
        return *this;
    }
    Jet1& operator/=(const Rational& c) {
        v /= c;
        for (auto& x : d) x /= c;
        return *this;
    }

    friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
    friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
    friend Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
    friend Jet1 operator/(Jet1 a, const Jet1& b) { return a /= b; }
    friend Jet1 operator*(Jet1 a, const Rational& c) { return a *= c; }
    friend Jet1 operator*(const Rational& c, Jet1 a) { return a *= c; }
    friend Jet1 operator/(Jet1 a, const Rational& c) { return a /= c; }
    friend Jet1 operator-(const Jet1& a) {
        Jet1 r = a;
        r.v = -r.v;
        for (auto& x : r.d) x = -x;
        return r;
    }

    friend bool operator==(const Jet1& a, const Jet1& b) { return a.v == b.v && a.d == b.d; }

    friend std::ostream& operator<<(std::ostream& os, const Jet1& j) {
        os << j.v << " [";
        for (std::size_t i = 0; i < j.d.size(); ++i) os << (i ? " " : "") << j.d[i];
        return os << "]";
    }
};

/// Second-order jet: value, gradient and symmetric Hessian (packed upper
/// triangle, row-major).
struct Jet2 {
    Rational v;
    std::vector<Rational> d;
    std::vector<Rational> h; // size n(n+1)/2

    Jet2() = default;

    static Jet2 constant(const Rational& c, int n) {
        Jet2 j;
        j.v = c;
        j.d.assign(n, Rational());
        j.h.assign(static_cast<std::size_t>(n) * (n + 1) / 2, Rational());
        return j;
    }
    static Jet2 coordinate(const Rational& value, int n, int i) {
        Jet2 j = constant(value, n);
        j.d[i - 1] = Rational(1);
        return j;
    }

    int vars() const { return static_cast<int>(d.size()); }

    static std::size_t hidx(int n, int i, int j) { // 1-based, i <= j after swap
        if (i > j) std::swap(i, j);
        int a = i - 1, b = j - 1;
        return static_cast<std::size_t>(a) * n - static_cast<std::size_t>(a) * (a + 1) / 2 + b;
    }
    const Rational& hess(int i, int j) const { return h[hidx(vars(), i, j)]; }
    Rational& hess(int i, int j) { return h[hidx(vars(), i, j)]; }

    bool is_zero() const {
        if (!v.is_zero()) return false;
        for (const auto& x : d)
            if (!x.is_zero()) return false;
        for (const auto& x : h)
            if (!x.is_zero()) return false;
        return true;
    }

    Jet2& operator+=(const Jet2& o) {
        v += o.v;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
        for (std::size_t i = 0; i < h.size(); ++i) h[i] += o.h[i];
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        v -= o.v;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
        for (std::size_t i = 0; i < h.size(); ++i) h[i] -= o.h[i];
        return *this;
    }
    Jet2& operator*=(const Jet2& o) {
        const int n = vars();
        std::vector<Rational> nh(h.size());
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                nh[hidx(n, i, j)] = v * o.hess(i, j) + o.v * hess(i, j) + d[i - 1] * o.d[j - 1] +
                                    o.d[i - 1] * d[j - 1];
        std::vector<Rational> nd(d.size());
        for (int i = 0; i < n; ++i) nd[i] = v * o.d[i] + d[i] * o.v;
        h = std::move(nh);
        d = std::move(nd);
        v *= o.v;
        return *this;
    }
    // f = (*this), g = o, q = f/g: solved from f = q*g order by order
    Jet2& operator/=(const Jet2& o) {
        if (o.v.is_zero()) throw Error("Jet2: division by zero value");
        const int n = vars();
        Rational qv = v / o.v;
        std::vector<Rational> qd(d.size());
        for (int i = 0; i < n; ++i) qd[i] = (d[i] - qv * o.d[i]) / o.v;
        std::vector<Rational> qh(h.size());
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                qh[hidx(n, i, j)] = (hess(i, j) - qv * o.hess(i, j) - qd[i - 1] * o.d[j - 1] -
                                     o.d[i - 1] * qd[j - 1]) /
                                    o.v;
        v = std::move(qv);
        d = std::move(qd);
        h = std::move(qh);
        return *this;
    }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
    friend Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
    friend Jet2 operator-(const Jet2& a) {
        Jet2 r = a;
        r.v = -r.v;
        for (auto& x : r.d) x = -x;
        for (auto& x : r.h) x = -x;
        return r;
    }
    friend bool operator==(const Jet2& a, const Jet2& b) { return a.v == b.v && a.d == b.d && a.h == b.h; }
};

/// Uniform construction/inspection of the scalar kinds the geometry code is
/// generic over (plain values, first- and second-order jets).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational zero(int) { return Rational(); }
    static Rational constant(const Rational& c, int) { return c; }
    static Rational coordinate(const Rational& value, int, int) { return value; }
    static const Rational& value(const Rational& s) { return s; }
    static bool is_zero(const Rational& s) { return s.is_zero(); }
};

template <>
struct ScalarOps<Jet1> {
    static Jet1 zero(int n) { return Jet1::constant(Rational(), n); }
    static Jet1 constant(const Rational& c, int n) { return Jet1::constant(c, n); }
    static Jet1 coordinate(const Rational& value, int n, int i) { return Jet1::coordinate(value, n, i); }
    static const Rational& value(const Jet1& s) { return s.v; }
    static bool is_zero(const Jet1& s) { return s.is_zero(); }
};

template <>
struct ScalarOps<Jet2> {
    static Jet2 zero(int n) { return Jet2::constant(Rational(), n); }
    static Jet2 constant(const Rational& c, int n) { return Jet2::constant(c, n); }
    static Jet2 coordinate(const Rational& value, int n, int i) { return Jet2::coordinate(value, n, i); }
    static const Rational& value(const Jet2& s) { return s.v; }
    static bool is_zero(const Jet2& s) { return s.is_zero(); }
};

/// Lifts a rational point to a vector of scalars of kind S (coordinate jets
/// for jet kinds, a plain copy for Rational).
template <class S>
std::vector<S> lift_point(const std::vector<Rational>& point) {
    const int n = static_cast<int>(point.size());
    std::vector<S> out;
    out.reserve(point.size());
    for (int i = 1; i <= n; ++i) out.push_back(ScalarOps<S>::coordinate(point[i - 1], n, i));
    return out;
}

} // namespace lauricella

#endif
