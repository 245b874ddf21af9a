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

#ifndef LAURICELLA_POLY_HPP
#define LAURICELLA_POLY_HPP

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "lauricella/errors.hpp"
#include "lauricella/jet.hpp"
#include "lauricella/rational.hpp"

namespace lauricella {

/// Sparse multivariate polynomial over the rationals in u^1..u^n.
/// Exponent vectors are stored densely per term; zero coefficients are never
/// stored.
class Poly {
  public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rational>;

    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) {}

    static Poly constant(int nvars, const Rational& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.t_[Exps(nvars, 0)] = c;
        return p;
    }
    /// u^i, 1-based.
    static Poly coordinate(int nvars, int i) {
        if (i < 1 || i > nvars) throw IndexOutOfRange("Poly::coordinate: index out of range");
        Poly p(nvars);
        Exps e(nvars, 0);
        e[i - 1] = 1;
        p.t_[std::move(e)] = Rational(1);
        return p;
    }
    static Poly monomial(int nvars, Exps e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars) throw ShapeMismatch("Poly::monomial: exponent arity");
        Poly p(nvars);
        if (!c.is_zero()) p.t_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [e, v] : t_) v *= c;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& [e, v] : r.t_) v = -v;
        return r;
    }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_arity(b);
        Poly r(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exps e(a.n_);
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    /// Exact formal partial derivative with respect to u^i (1-based).
    Poly partial(int i) const {
        if (i < 1 || i > n_) throw IndexOutOfRange("Poly::partial: index out of range");
        Poly r(n_);
        for (const auto& [e, c] : t_) {
            if (e[i - 1] == 0) continue;
            Exps de = e;
            de[i - 1] -= 1;
            r.add_term(std::move(de), c * Rational(e[i - 1]));
        }
        return r;
    }

    /// Term-by-term substitution at a rational point.
    Rational eval(const std::vector<Rational>& point) const {
        check_point(point);
        Rational acc;
        for (const auto& [e, c] : t_) {
            Rational t = c;
            for (int i = 0; i < n_; ++i)
                if (e[i] != 0) t *= pow_int(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

    /// Evaluation in scalar kind S (plain, first- or second-order jets):
    /// substitutes lifted coordinates and runs the same term-by-term sum in
    /// S-arithmetic.
    template <class S>
    S eval_scalar(const std::vector<S>& coords) const {
        if (static_cast<int>(coords.size()) != n_) throw ShapeMismatch("Poly::eval_scalar: arity");
        S acc = ScalarOps<S>::zero(n_);
        for (const auto& [e, c] : t_) {
            S t = ScalarOps<S>::constant(c, n_);
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= coords[i];
            acc += t;
        }
        return acc;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    Rational coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rational() : it->second;
    }

    void add_term(Exps e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

  private:
    void check_arity(const Poly& o) const {
        if (n_ != o.n_) throw ShapeMismatch("Poly: mixed variable counts");
    }
    void check_point(const std::vector<Rational>& p) const {
        if (static_cast<int>(p.size()) != n_) throw ShapeMismatch("Poly: point arity mismatch");
    }

    int n_ = 0;
    TermMap t_;
};

/// jet_lift(p, point, order): jets whose value/gradient(/Hessian) equal the
/// exact evaluations of p and its formal partials at the point. Computed by
/// running the polynomial through jet arithmetic.
inline Jet1 jet_lift1(const Poly& p, const std::vector<Rational>& point) {
    return p.eval_scalar(lift_point<Jet1>(point));
}
inline Jet2 jet_lift2(const Poly& p, const std::vector<Rational>& point) {
    return p.eval_scalar(lift_point<Jet2>(point));
}

/// Square matrix of polynomials (row-major, 1-based accessors).
struct PolyMatrix {
    int n = 0;
    int nvars = 0;
    std::vector<Poly> a;

    PolyMatrix() = default;
    PolyMatrix(int size, int vars) : n(size), nvars(vars), a(static_cast<std::size_t>(size) * size, Poly(vars)) {}

    static PolyMatrix identity(int size, int vars) {
        PolyMatrix m(size, vars);
        for (int i = 1; i <= size; ++i) m.at(i, i) = Poly::constant(vars, Rational(1));
        return m;
    }

    Poly& at(int i, int j) { return a[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
    const Poly& at(int i, int j) const { return a[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.n != y.n || x.nvars != y.nvars) throw ShapeMismatch("PolyMatrix: size mismatch");
        PolyMatrix r(x.n, x.nvars);
        for (int i = 1; i <= x.n; ++i)
            for (int j = 1; j <= x.n; ++j) {
                Poly s(x.nvars);
                for (int k = 1; k <= x.n; ++k) s += x.at(i, k) * y.at(k, j);
                r.at(i, j) = std::move(s);
            }
        return r;
    }
    friend PolyMatrix operator-(PolyMatrix x, const PolyMatrix& y) {
        if (x.n != y.n || x.nvars != y.nvars) throw ShapeMismatch("PolyMatrix: size mismatch");
        for (int i = 1; i <= x.n; ++i)
            for (int j = 1; j <= x.n; ++j) x.at(i, j) -= y.at(i, j);
        return x;
    }
    /// x - f*I
    friend PolyMatrix sub_scalar_identity(PolyMatrix x, const Poly& f) {
        for (int i = 1; i <= x.n; ++i) x.at(i, i) -= f;
        return x;
    }
    friend PolyMatrix scale(PolyMatrix x, const Poly& f) {
        for (auto& p : x.a) p = p * f;
        return x;
    }
    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
        return x.n == y.n && x.nvars == y.nvars && x.a == y.a;
    }
    bool is_zero() const {
        for (const auto& p : a)
            if (!p.is_zero()) return false;
        return true;
    }

    template <class S>
    std::vector<std::vector<S>> eval_scalar(const std::vector<S>& coords) const {
        std::vector<std::vector<S>> m(n, std::vector<S>());
        for (int i = 1; i <= n; ++i) {
            m[i - 1].reserve(n);
            for (int j = 1; j <= n; ++j) m[i - 1].push_back(at(i, j).eval_scalar(coords));
        }
        return m;
    }
};

} // namespace lauricella

#endif
