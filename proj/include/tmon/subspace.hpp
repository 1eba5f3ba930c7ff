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

#ifndef TMON_SUBSPACE_HPP
#define TMON_SUBSPACE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "etale.hpp"

namespace tmon {

/// Linear subspace of Q^n stored by its reduced row echelon basis. Two
/// subspaces are equal iff ambient dimensions and RREF bases agree.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient), {}); }
    static Subspace full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

    static Subspace row_space(const Matrix& m) {
        auto [red, pivots] = rref_with_pivots(m);
        Matrix b(pivots.size(), m.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = red(i, j);
        return Subspace(m.cols(), std::move(b), std::move(pivots));
    }

    static Subspace span(std::size_t ambient, std::span<const Vector> vectors) {
        return row_space(Matrix::from_rows(vectors, ambient));
    }
    static Subspace span(std::span<const AlgElement> elements) {
        if (elements.empty()) fail(ErrorCode::InvalidArgument, "span of no elements needs an explicit ambient dimension");
        std::vector<Vector> rows;
        for (const auto& u : elements) {
            AlgElement::check_parents(u, elements.front());
            rows.push_back(u.coords());
        }
        return span(elements.front().parent().degree(), rows);
    }

    /// {v : m v = 0}
    static Subspace kernel(const Matrix& m) { return row_space(nullspace_rows(m)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector vector(std::size_t i) const { return basis_.row(i); }

    /// Coefficients of v in the RREF basis, or nullopt if v is not in the subspace.
    std::optional<Vector> coordinates(const Vector& v) const {
        check_ambient(v.size());
        Vector coef(dim());
        for (std::size_t i = 0; i < dim(); ++i) coef[i] = v[pivots_[i]];
        for (std::size_t j = 0; j < ambient_; ++j) {
            Rational s;
            for (std::size_t i = 0; i < dim(); ++i) s += coef[i] * basis_(i, j);
            if (s != v[j]) return std::nullopt;
        }
        return coef;
    }

    /// Orthogonal complement under the standard dot product.
    Subspace annihilator() const {
        if (dim() == 0) return full(ambient_);
        return kernel(basis_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

    void check_ambient(std::size_t n) const {
        if (n != ambient_) fail(ErrorCode::DimensionMismatch, "ambient dimension " + std::to_string(n) + " vs " + std::to_string(ambient_));
    }

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

inline bool member(const Vector& v, const Subspace& s) { return s.coordinates(v).has_value(); }
inline bool member(const AlgElement& v, const Subspace& s) { return member(v.coords(), s); }

/// Is inner a subspace of outer?
inline bool contains(const Subspace& outer, const Subspace& inner) {
    outer.check_ambient(inner.ambient_dim());
    for (std::size_t i = 0; i < inner.dim(); ++i)
        if (!member(inner.vector(i), outer)) return false;
    return true;
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_dim());
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.vector(i));
    return Subspace::span(a.ambient_dim(), rows);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_dim());
    // A cap B = ann(ann A + ann B)
    return sum(a.annihilator(), b.annihilator()).annihilator();
}

inline std::vector<AlgElement> basis_elements(const Subspace& s, const EtaleAlgebra& e) {
    s.check_ambient(e.degree());
    std::vector<AlgElement> out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(e.element(s.vector(i)));
    return out;
}

/// Span of all products v*w with v in V, w in W.
inline Subspace mul_subspaces(const Subspace& v, const Subspace& w, const EtaleAlgebra& e) {
    v.check_ambient(e.degree());
    w.check_ambient(e.degree());
    std::vector<Vector> rows;
    for (const auto& a : basis_elements(v, e))
        for (const auto& b : basis_elements(w, e)) rows.push_back((a * b).coords());
    if (rows.empty()) return Subspace::zero(e.degree());
    return Subspace::span(e.degree(), rows);
}

/// t*V for an element t.
inline Subspace scale(const AlgElement& t, const Subspace& v) {
    const EtaleAlgebra& e = t.parent();
    std::vector<Vector> rows;
    for (const auto& a : basis_elements(v, e)) rows.push_back((t * a).coords());
    if (rows.empty()) return Subspace::zero(e.degree());
    return Subspace::span(e.degree(), rows);
}

/// 2x2 minors of a two-dimensional subspace's RREF basis, indexed (i<j) lexicographically.
inline Vector plucker(const Subspace& s) {
    if (s.dim() != 2) fail(ErrorCode::DimensionMismatch, "Plucker coordinates are emitted for planes only");
    const Matrix& b = s.basis();
    Vector p;
    for (std::size_t i = 0; i < s.ambient_dim(); ++i)
        for (std::size_t j = i + 1; j < s.ambient_dim(); ++j) p.push_back(b(0, i) * b(1, j) - b(0, j) * b(1, i));
    return p;
}

/// A hyperplane of E given as ker(x -> trace(c*x)). The dual c is normalized so
/// its first nonzero coordinate is 1.
class Hyperplane {
public:
    static Hyperplane from_dual(const AlgElement& c) {
        std::size_t k = 0;
        while (k < c.coords().size() && c[k].is_zero()) ++k;
        if (k == c.coords().size()) fail(ErrorCode::InvalidArgument, "hyperplane dual must be nonzero");
        return Hyperplane(c[k].inverse() * c);
    }

    static Hyperplane from_subspace(const Subspace& s, const EtaleAlgebra& e) {
        s.check_ambient(e.degree());
        if (s.dim() + 1 != e.degree())
            fail(ErrorCode::DimensionMismatch, "subspace of dimension " + std::to_string(s.dim()) + " is not a hyperplane");
        Subspace ann = s.annihilator();
        return from_dual(trace_dual(e, ann.vector(0)));
    }

    const AlgElement& dual() const { return dual_; }

    Subspace as_subspace() const {
        Vector row = trace_functional(dual_);
        return Subspace::kernel(Matrix::from_rows(std::span<const Vector>(&row, 1), row.size()));
    }

    /// The dense orbit consists of hyperplanes with a unit dual.
    bool in_dense_orbit() const { return is_unit(dual_); }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.dual_ == b.dual_; }

private:
    explicit Hyperplane(AlgElement c) : dual_(std::move(c)) {}
    AlgElement dual_;
};

}  // namespace tmon

#endif  // TMON_SUBSPACE_HPP
