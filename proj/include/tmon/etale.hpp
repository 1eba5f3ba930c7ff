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

#ifndef TMON_ETALE_HPP
#define TMON_ETALE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace tmon {

class AlgElement;

/// E = Q[x]/(p_1) x ... x Q[x]/(p_k) with each p_i monic and squarefree.
/// The distinguished basis concatenates the power bases 1, x, ..., x^{deg p_i - 1}.
/// Copies share one immutable representation.
class EtaleAlgebra {
public:
    explicit EtaleAlgebra(std::vector<Poly> factors) {
        if (factors.empty()) fail(ErrorCode::InvalidArgument, "an etale algebra needs at least one factor");
        auto rep = std::make_shared<Rep>();
        std::size_t off = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const Poly& p = factors[i];
            if (p.degree() < 1) fail(ErrorCode::InvalidArgument, "factor " + std::to_string(i) + " has degree < 1");
            if (p.lc() != Rational(1)) fail(ErrorCode::NotMonic, "factor " + std::to_string(i) + " = " + p.str());
            if (!is_squarefree(p)) fail(ErrorCode::NotSquarefree, "factor " + std::to_string(i) + " = " + p.str());
            rep->offsets.push_back(off);
            off += static_cast<std::size_t>(p.degree());
        }
        rep->factors = std::move(factors);
        rep->n = off;
        rep_ = std::move(rep);
        init_trace_form();
    }

    /// Q^n presented by the linear factors x - node.
    static EtaleAlgebra split(std::span<const Rational> nodes) {
        std::vector<Poly> f;
        for (const auto& d : nodes) f.push_back(Poly::linear(d));
        return EtaleAlgebra(std::move(f));
    }
    /// Q^n with nodes 0, 1, ..., n-1.
    static EtaleAlgebra split(std::size_t n) {
        std::vector<Rational> nodes;
        for (std::size_t i = 0; i < n; ++i) nodes.emplace_back(static_cast<long>(i));
        return split(nodes);
    }

    std::size_t degree() const { return rep_->n; }
    std::size_t factor_count() const { return rep_->factors.size(); }
    const std::vector<Poly>& factors() const { return rep_->factors; }
    const Poly& factor(std::size_t i) const { return rep_->factors[i]; }
    std::size_t offset(std::size_t i) const { return rep_->offsets[i]; }
    std::size_t factor_degree(std::size_t i) const { return static_cast<std::size_t>(rep_->factors[i].degree()); }

    /// Gram matrix of the trace form in the distinguished basis.
    const Matrix& trace_gram() const { return rep_->gram; }
    /// trace(e_k) for each basis vector.
    const Vector& basis_traces() const { return rep_->basis_traces; }
    const Matrix& trace_gram_inverse() const { return rep_->gram_inverse; }

    AlgElement zero() const;
    AlgElement one() const;
    AlgElement basis(std::size_t k) const;
    AlgElement element(Vector coords) const;

    friend bool operator==(const EtaleAlgebra& a, const EtaleAlgebra& b) {
        return a.rep_ == b.rep_ || a.rep_->factors == b.rep_->factors;
    }

private:
    struct Rep {
        std::vector<Poly> factors;
        std::vector<std::size_t> offsets;
        std::size_t n = 0;
        Matrix gram;
        Matrix gram_inverse;
        Vector basis_traces;
    };

    void init_trace_form();

    std::shared_ptr<Rep> rep_;
};

/// Element of an etale algebra, stored as coordinates in the distinguished basis.
class AlgElement {
public:
    AlgElement(EtaleAlgebra parent, Vector coords) : parent_(std::move(parent)), c_(std::move(coords)) {
        if (c_.size() != parent_.degree())
            fail(ErrorCode::DimensionMismatch, "element has " + std::to_string(c_.size()) + " coordinates, algebra degree is " +
                                                   std::to_string(parent_.degree()));
    }

    const EtaleAlgebra& parent() const { return parent_; }
    const Vector& coords() const { return c_; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Component in the i-th factor as a polynomial of degree < deg p_i.
    Poly component(std::size_t i) const {
        const std::size_t off = parent_.offset(i), d = parent_.factor_degree(i);
        return Poly(Vector(c_.begin() + static_cast<std::ptrdiff_t>(off), c_.begin() + static_cast<std::ptrdiff_t>(off + d)));
    }

    static AlgElement from_components(const EtaleAlgebra& e, std::span<const Poly> comps) {
        Vector c(e.degree());
        for (std::size_t i = 0; i < e.factor_count(); ++i) {
            Poly r = comps[i] % e.factor(i);
            for (std::size_t j = 0; j < e.factor_degree(i); ++j) c[e.offset(i) + j] = r.coeff(j);
        }
        return AlgElement(e, std::move(c));
    }

    AlgElement operator-() const {
        Vector c = c_;
        for (auto& x : c) x = -x;
        return {parent_, std::move(c)};
    }
    friend AlgElement operator+(const AlgElement& u, const AlgElement& v) {
        check_parents(u, v);
        Vector c(u.c_.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = u.c_[k] + v.c_[k];
        return {u.parent_, std::move(c)};
    }
    friend AlgElement operator-(const AlgElement& u, const AlgElement& v) { return u + (-v); }
    friend AlgElement operator*(const Rational& s, const AlgElement& u) {
        Vector c = u.c_;
        for (auto& x : c) x *= s;
        return {u.parent_, std::move(c)};
    }
    friend AlgElement operator*(const AlgElement& u, const AlgElement& v) {
        check_parents(u, v);
        const EtaleAlgebra& e = u.parent_;
        std::vector<Poly> comps;
        comps.reserve(e.factor_count());
        for (std::size_t i = 0; i < e.factor_count(); ++i) comps.push_back(u.component(i) * v.component(i));
        return from_components(e, comps);
    }

    AlgElement pow(unsigned e) const {
        AlgElement r = parent_.one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const AlgElement& u, const AlgElement& v) { return u.parent_ == v.parent_ && u.c_ == v.c_; }

    static void check_parents(const AlgElement& u, const AlgElement& v) {
        if (!(u.parent_ == v.parent_)) fail(ErrorCode::ParentMismatch, "elements belong to different algebras");
    }

private:
    EtaleAlgebra parent_;
    Vector c_;
};

inline AlgElement EtaleAlgebra::zero() const { return {*this, Vector(degree())}; }
inline AlgElement EtaleAlgebra::one() const {
    Vector c(degree());
    for (std::size_t i = 0; i < factor_count(); ++i) c[offset(i)] = Rational(1);
    return {*this, std::move(c)};
}
inline AlgElement EtaleAlgebra::basis(std::size_t k) const {
    Vector c(degree());
    c.at(k) = Rational(1);
    return {*this, std::move(c)};
}
inline AlgElement EtaleAlgebra::element(Vector coords) const { return {*this, std::move(coords)}; }

/// Matrix of x -> u*x; column k holds the coordinates of u*e_k.
inline Matrix mult_matrix(const AlgElement& u) {
    const EtaleAlgebra& e = u.parent();
    const std::size_t n = e.degree();
    Matrix m(n, n);
    for (std::size_t i = 0; i < e.factor_count(); ++i) {
        const std::size_t off = e.offset(i), d = e.factor_degree(i);
        Poly cur = u.component(i);
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t r = 0; r < d; ++r) m(off + r, off + k) = cur.coeff(r);
            cur = (cur * Poly::x()) % e.factor(i);
        }
    }
    return m;
}

inline Poly char_poly(const AlgElement& u) { return charpoly(mult_matrix(u)); }

inline Rational trace(const AlgElement& u) {
    const Vector& t = u.parent().basis_traces();
    Rational s;
    for (std::size_t k = 0; k < t.size(); ++k) s += u[k] * t[k];
    return s;
}

inline Rational norm(const AlgElement& u) { return det(mult_matrix(u)); }

inline bool has_distinct_eigenvalues(const AlgElement& u) { return is_squarefree(char_poly(u)); }

inline AlgElement inverse(const AlgElement& u) {
    const EtaleAlgebra& e = u.parent();
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < e.factor_count(); ++i) {
        auto [d, s, t] = poly_xgcd(u.component(i), e.factor(i));
        if (d.degree() != 0)
            fail(ErrorCode::NotAUnit, "component " + std::to_string(i) + " shares the factor " + (d.is_zero() ? e.factor(i) : d).str() +
                                          " with " + e.factor(i).str());
        comps.push_back(std::move(s));
    }
    return AlgElement::from_components(e, comps);
}

inline bool is_unit(const AlgElement& u) { return !norm(u).is_zero(); }

/// The unique c with l(x) = trace(c*x) for all x, where l is given by its
/// values on the distinguished basis.
inline AlgElement trace_dual(const EtaleAlgebra& e, const Vector& functional) {
    if (functional.size() != e.degree()) fail(ErrorCode::DimensionMismatch, "functional length differs from algebra degree");
    return e.element(e.trace_gram_inverse() * functional);
}

/// Row of the functional x -> trace(c*x) in the distinguished basis.
inline Vector trace_functional(const AlgElement& c) { return c.parent().trace_gram() * c.coords(); }

inline void EtaleAlgebra::init_trace_form() {
    Rep& r = *rep_;
    r.gram = Matrix(r.n, r.n);
    r.basis_traces.assign(r.n, Rational(0));
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const Poly& p = r.factors[i];
        const std::size_t d = static_cast<std::size_t>(p.degree());
        // Power sums trace(x^m), m < 2d - 1, via Newton's identities on p.
        std::vector<Rational> power(2 * d - 1);
        auto e = [&](std::size_t k) { return k == 0 ? Rational(1) : (k % 2 ? -p.coeff(d - k) : p.coeff(d - k)); };
        power[0] = Rational(static_cast<long>(d));
        for (std::size_t m = 1; m < power.size(); ++m) {
            Rational s;
            for (std::size_t k = 1; k <= std::min(m, d); ++k) {
                Rational term = e(k) * (k == m ? Rational(static_cast<long>(m)) : power[m - k]);
                s += (k % 2 ? term : -term);
            }
            power[m] = s;
        }
        const std::size_t off = r.offsets[i];
        for (std::size_t j = 0; j < d; ++j) {
            r.basis_traces[off + j] = power[j];
            for (std::size_t k = 0; k < d; ++k) r.gram(off + j, off + k) = power[j + k];
        }
    }
    auto inv = inverse(r.gram);
    if (!inv) fail(ErrorCode::InvariantViolation, "trace form is degenerate on a squarefree presentation");
    r.gram_inverse = std::move(*inv);
}

/// First element (after skipping `seed` earlier hits) with distinct eigenvalues.
/// Candidates are visited in two stages: all integer coordinate vectors in order
/// of increasing max-norm height, lexicographic within a height, for the first
/// kHeightStageBudget candidates; then the moment-curve family
/// sum_k m^k e_k for m = 2, 3, ...
inline AlgElement find_generator(const EtaleAlgebra& e, std::uint64_t seed = 0) {
    constexpr std::size_t kHeightStageBudget = 4096;
    constexpr std::size_t kCandidateCap = 1'000'000;
    const std::size_t n = e.degree();
    std::size_t visited = 0;
    std::uint64_t skip = seed;
    auto accept = [&](const AlgElement& u) {
        ++visited;
        if (!has_distinct_eigenvalues(u)) return false;
        if (skip == 0) return true;
        --skip;
        return false;
    };

    for (long h = 0; visited < kHeightStageBudget; ++h) {
        std::vector<long> v(n, -h);
        while (visited < kHeightStageBudget) {
            bool at_height = false;
            for (long x : v) at_height = at_height || (x == h || x == -h);
            if (at_height) {
                Vector c(n);
                for (std::size_t k = 0; k < n; ++k) c[k] = Rational(v[k]);
                AlgElement u = e.element(std::move(c));
                if (accept(u)) return u;
            }
            std::size_t k = n;
            while (k > 0 && v[k - 1] == h) v[--k] = -h;
            if (k == 0) break;
            ++v[k - 1];
        }
        if (h == 0 && n == 0) break;
    }
    for (long m = 2; visited < kCandidateCap; ++m) {
        Vector c(n);
        Rational p(1);
        for (std::size_t k = 0; k < n; ++k, p *= Rational(m)) c[k] = p;
        AlgElement u = e.element(std::move(c));
        if (accept(u)) return u;
    }
    fail(ErrorCode::GeneratorSearchExhausted, "no element with distinct eigenvalues among " + std::to_string(kCandidateCap) + " candidates");
}

}  // namespace tmon

#endif  // TMON_ETALE_HPP
