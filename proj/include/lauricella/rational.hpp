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

#ifndef LAURICELLA_RATIONAL_HPP
#define LAURICELLA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "lauricella/errors.hpp"

namespace lauricella {

/// Arbitrary-precision rational scalar. Always kept in canonical form
/// (positive denominator, reduced). All arithmetic is exact.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw Error("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (arbitrary precision, optional leading '-').
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw ParseError("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.q_))); }

    friend Rational pow_int(const Rational& base, long e) {
        if (e < 0) {
            if (base.is_zero()) throw Error("Rational: zero to negative power");
            return Rational(1) / pow_int(base, -e);
        }
        Rational acc(1), b = base;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= b;
            if (k > 1) b *= b;
        }
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

inline Rational operator""_q(const char* s) { return Rational::parse(s); }

} // namespace lauricella

#endif
