/*
   Copyright 2026 The tmon Authors

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

#ifndef TMON_POLY_HPP
#define TMON_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace tmon {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    /// x - root
    static Poly linear(const Rational& root) { return Poly({-root, Rational(1)}); }
    static Poly monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& at) const {
        Rational r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lc().inverse();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(d));
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Rational& s) {
        if (s.is_zero()) return {};
        Poly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned e) const {
        Poly r = constant(Rational(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            std::string term = c.abs().str();
            bool unit = c.abs() == Rational(1);
            if (i > 0) term = (unit ? "" : term + "*") + "x" + (i > 1 ? "^" + std::to_string(i) : "");
            if (out.empty())
                out = (c.sign() < 0 ? "-" : "") + term;
            else
                out += (c.sign() < 0 ? " - " : " + ") + term;
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv_lc = b.lc().inverse();
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] * inv_lc;
        quo[static_cast<std::size_t>(i - db)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
inline Poly poly_gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

/// Returns (d, u, v) with u*f + v*g = d, d the monic gcd.
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& f, const Poly& g) {
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(Rational(1)), s1;
    Poly t0, t1 = Poly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly{}, Poly{}, Poly{}};
    Rational inv = r0.lc().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

inline bool is_squarefree(const Poly& f) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "is_squarefree of the zero polynomial");
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/// Resultant via the Euclidean remainder sequence:
///   res(A, B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} res(B, R),  R = A mod B.
inline Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
    Poly a = f, b = g;
    Rational acc(1);
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) return acc * b.lc().pow(static_cast<unsigned long>(da));
        if (da == 0) return acc * a.lc().pow(static_cast<unsigned long>(db));
        Poly r = a % b;
        if (r.is_zero()) return Rational(0);
        if ((da * db) % 2 == 1) acc = -acc;
        acc *= b.lc().pow(static_cast<unsigned long>(da - r.degree()));
        a = std::move(b);
        b = std::move(r);
    }
}

/// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f)
inline Rational discriminant(const Poly& f) {
    if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "discriminant needs degree >= 1");
    const int d = f.degree();
    Rational r = resultant(f, f.derivative()) / f.lc();
    return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

}  // namespace tmon

#endif  // TMON_POLY_HPP
