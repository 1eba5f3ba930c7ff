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

#ifndef TMON_PARAMETRIZE_HPP
#define TMON_PARAMETRIZE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "subspace.hpp"

namespace tmon {

/// A point (x, y) of Q^2 (x) E. For split E = Q^n this is the ordered tuple of
/// points [x_i : y_i] on the projective line.
struct Configuration {
    AlgElement x;
    AlgElement y;

    Subspace span() const {
        AlgElement::check_parents(x, y);
        std::array<AlgElement, 2> v{x, y};
        return Subspace::span(v);
    }
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Element (g, t) of (GL_2 x E^*) / Q^*. The pairs (g, t) and (l*g, t/l) act identically.
class TwistedGroupElement {
public:
    using Mat2 = std::array<Rational, 4>;  // row-major g11, g12, g21, g22

    TwistedGroupElement(Mat2 g, AlgElement t) : g_(std::move(g)), t_(std::move(t)) {
        if ((g_[0] * g_[3] - g_[1] * g_[2]).is_zero()) fail(ErrorCode::InvalidArgument, "group element has singular g");
        if (!is_unit(t_)) fail(ErrorCode::NotAUnit, "group element has non-unit t");
    }

    static TwistedGroupElement identity(const EtaleAlgebra& e) {
        return {{Rational(1), Rational(0), Rational(0), Rational(1)}, e.one()};
    }

    const Mat2& g() const { return g_; }
    const AlgElement& t() const { return t_; }

private:
    Mat2 g_;
    AlgElement t_;
};

/// (x, y) -> (t (g11 x + g12 y), t (g21 x + g22 y))
inline Configuration act(const TwistedGroupElement& e, const Configuration& cfg) {
    AlgElement::check_parents(cfg.x, e.t());
    AlgElement::check_parents(cfg.y, e.t());
    const auto& g = e.g();
    return {e.t() * (g[0] * cfg.x + g[1] * cfg.y), e.t() * (g[2] * cfg.x + g[3] * cfg.y)};
}

/// Figures recorded while a context is verified.
struct ContextChecks {
    std::size_t power_rank = 0;       // rank of 1, a, ..., a^{2s}
    std::size_t witness_dim = 0;      // dim(V0 * W), V0 = span(1, a^s)
    Rational witness_dual_norm;       // norm of the dual of V0 * W
    std::size_t z_dim = 0;
};

/// Frozen data of one parametrization: generator a, W = span(1, ..., a^{s-1}),
/// the hyperplane H = ker trace(c_H *), and Z = {b : b*W in H}.
class ParamContext {
public:
    /// Builds and verifies a context from an explicit generator and hyperplane dual.
    static ParamContext make(const EtaleAlgebra& e, const AlgElement& a, const AlgElement& c_h) {
        const std::size_t n = e.degree();
        if (n % 2 == 0) fail(ErrorCode::EvenDegree, "degree " + std::to_string(n) + " is even; see the obstruction commands");
        if (n < 5) fail(ErrorCode::DegreeTooSmall, "degree " + std::to_string(n) + " < 5");
        AlgElement::check_parents(a, e.one());
        AlgElement::check_parents(c_h, e.one());
        if (!has_distinct_eigenvalues(a)) fail(ErrorCode::InvalidArgument, "generator does not have distinct eigenvalues");
        if (!is_unit(c_h)) fail(ErrorCode::NotAUnit, "hyperplane dual c_H is not a unit");

        ParamContext ctx(e, a, c_h);
        const std::size_t s = (n - 1) / 2;
        ctx.s_ = s;

        std::vector<AlgElement> powers{e.one()};
        for (std::size_t k = 1; k <= 2 * s; ++k) powers.push_back(powers.back() * a);
        ctx.checks_.power_rank = Subspace::span(powers).dim();
        if (ctx.checks_.power_rank != n)
            fail(ErrorCode::ContextDegenerate, "1, a, ..., a^" + std::to_string(2 * s) + " have rank " + std::to_string(ctx.checks_.power_rank));

        ctx.w_ = Subspace::span(std::span<const AlgElement>(powers.data(), s));

        // Z = {b : trace(c_H * b * w_j) = 0 for all j}
        Matrix cond(s, n);
        for (std::size_t j = 0; j < s; ++j) {
            Vector row = trace_functional(c_h * powers[j]);
            for (std::size_t k = 0; k < n; ++k) cond(j, k) = row[k];
        }
        ctx.z_ = Subspace::kernel(cond);
        ctx.checks_.z_dim = ctx.z_.dim();
        if (ctx.z_.dim() != s + 1) fail(ErrorCode::ContextDegenerate, "dim Z = " + std::to_string(ctx.z_.dim()));

        std::array<AlgElement, 2> v0{e.one(), powers[s]};
        Subspace v0w = mul_subspaces(Subspace::span(v0), ctx.w_, e);
        ctx.checks_.witness_dim = v0w.dim();
        if (v0w.dim() != 2 * s) fail(ErrorCode::ContextDegenerate, "dim(V0 * W) = " + std::to_string(v0w.dim()));
        ctx.checks_.witness_dual_norm = norm(Hyperplane::from_subspace(v0w, e).dual());
        if (ctx.checks_.witness_dual_norm.is_zero()) fail(ErrorCode::ContextDegenerate, "witness V0 * W is outside the dense orbit");
        return ctx;
    }

    const EtaleAlgebra& algebra() const { return e_; }
    std::size_t degree() const { return e_.degree(); }
    std::size_t s() const { return s_; }
    const AlgElement& generator() const { return a_; }
    const AlgElement& c_h() const { return c_h_; }
    const AlgElement& c_h_inverse() const { return c_h_inv_; }
    Hyperplane hyperplane() const { return Hyperplane::from_dual(c_h_); }
    const Subspace& w() const { return w_; }
    const Subspace& z() const { return z_; }
    /// Ordered basis z_1, ..., z_{s+1} of Z: the rows of its RREF basis.
    std::vector<AlgElement> z_basis() const { return basis_elements(z_, e_); }
    const ContextChecks& checks() const { return checks_; }

private:
    ParamContext(EtaleAlgebra e, AlgElement a, AlgElement c_h)
        : e_(std::move(e)), a_(std::move(a)), c_h_(std::move(c_h)), c_h_inv_(inverse(c_h_)) {}

    EtaleAlgebra e_;
    AlgElement a_;
    AlgElement c_h_;
    AlgElement c_h_inv_;
    std::size_t s_ = 0;
    Subspace w_;
    Subspace z_;
    ContextChecks checks_;
};

/// Context with a = find_generator(E, seed) and c_H = 1.
inline ParamContext build_context(const EtaleAlgebra& e, std::uint64_t seed = 0) {
    const std::size_t n = e.degree();
    if (n % 2 == 0) fail(ErrorCode::EvenDegree, "degree " + std::to_string(n) + " is even; see the obstruction commands");
    if (n < 5) fail(ErrorCode::DegreeTooSmall, "degree " + std::to_string(n) + " < 5");
    return ParamContext::make(e, find_generator(e, seed), e.one());
}

/// V -> V * W as a point of the dual projective space.
inline Hyperplane f_w(const ParamContext& ctx, const Subspace& v) {
    if (v.dim() != 2) fail(ErrorCode::NotInGeneralPosition, "V has dimension " + std::to_string(v.dim()) + ", expected 2");
    Subspace vw = mul_subspaces(v, ctx.w(), ctx.algebra());
    if (vw.dim() != 2 * ctx.s())
        fail(ErrorCode::NotInGeneralPosition, "dim(V * W) = " + std::to_string(vw.dim()) + " < " + std::to_string(2 * ctx.s()));
    return Hyperplane::from_subspace(vw, ctx.algebra());
}

/// The unique representative tV of the torus orbit of V lying in Gr(2, Z),
/// with t = c_V / c_H.
inline Subspace canonical(const ParamContext& ctx, const Subspace& v) {
    Hyperplane hv = f_w(ctx, v);
    if (!hv.in_dense_orbit()) fail(ErrorCode::NotInDenseOrbit, "dual of V * W is not a unit");
    AlgElement t = hv.dual() * ctx.c_h_inverse();
    Subspace out = scale(t, v);
    if (!contains(ctx.z(), out)) fail(ErrorCode::InvariantViolation, "canonical representative is not contained in Z");
    return out;
}

inline Subspace canonical(const ParamContext& ctx, const Configuration& cfg) {
    AlgElement::check_parents(cfg.x, ctx.algebra().one());
    return canonical(ctx, cfg.span());
}

/// Schubert-cell chart on Gr(2, Z): pivots are 1-based columns of the RREF of
/// S written in the basis z_1, ..., z_{s+1}; coords are the entries of the
/// non-pivot columns to the right of each row's pivot, row-major.
struct ChartPoint {
    std::pair<std::size_t, std::size_t> pivots;
    Vector coords;
    friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

inline ChartPoint chart_coords(const ParamContext& ctx, const Subspace& s) {
    if (s.dim() != 2) fail(ErrorCode::DimensionMismatch, "chart expects a plane, got dimension " + std::to_string(s.dim()));
    const std::size_t m = ctx.s() + 1;
    Matrix c(2, m);
    for (std::size_t i = 0; i < 2; ++i) {
        auto coef = ctx.z().coordinates(s.vector(i));
        if (!coef) fail(ErrorCode::NotInSubspace, "S is not contained in Z");
        for (std::size_t j = 0; j < m; ++j) c(i, j) = (*coef)[j];
    }
    auto [red, piv] = rref_with_pivots(c);
    ChartPoint out{{piv[0] + 1, piv[1] + 1}, {}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = piv[i] + 1; j < m; ++j)
            if (j != piv[0] && j != piv[1]) out.coords.push_back(red(i, j));
    return out;
}

inline Subspace from_chart(const ParamContext& ctx, const ChartPoint& p) {
    const std::size_t m = ctx.s() + 1;
    const auto [i, j] = p.pivots;
    if (i < 1 || j <= i || j > m) fail(ErrorCode::MalformedProfile, "pivot pair must satisfy 1 <= i < j <= " + std::to_string(m));
    const std::size_t pi = i - 1, pj = j - 1;
    const std::size_t expected = (m - pi - 2) + (m - pj - 1);
    if (p.coords.size() != expected)
        fail(ErrorCode::MalformedProfile, "expected " + std::to_string(expected) + " coordinates, got " + std::to_string(p.coords.size()));
    Matrix c(2, m);
    c(0, pi) = Rational(1);
    c(1, pj) = Rational(1);
    std::size_t k = 0;
    for (std::size_t r = 0; r < 2; ++r) {
        const std::size_t piv = r == 0 ? pi : pj;
        for (std::size_t col = piv + 1; col < m; ++col)
            if (col != pi && col != pj) c(r, col) = p.coords[k++];
    }
    return Subspace::row_space(c * ctx.z().basis());
}

/// Configuration whose x and y are the two RREF basis rows of S.
inline Configuration realize(const ParamContext& ctx, const Subspace& s) {
    if (s.dim() != 2) fail(ErrorCode::DimensionMismatch, "realize expects a plane, got dimension " + std::to_string(s.dim()));
    if (!contains(ctx.z(), s)) fail(ErrorCode::NotInSubspace, "S is not contained in Z");
    return {ctx.algebra().element(s.vector(0)), ctx.algebra().element(s.vector(1))};
}

}  // namespace tmon

#endif  // TMON_PARAMETRIZE_HPP
