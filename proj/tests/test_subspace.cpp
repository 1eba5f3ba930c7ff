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

#include <gtest/gtest.h>

#include "tmon/random.hpp"

using namespace tmon;

namespace {

Vector V(std::initializer_list<long> c) {
    Vector v;
    for (long x : c) v.emplace_back(x);
    return v;
}

Subspace S(std::size_t n, std::initializer_list<Vector> rows) {
    std::vector<Vector> r(rows);
    return Subspace::span(n, r);
}

Subspace random_subspace(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<Vector> rows(k, Vector(n));
    for (auto& r : rows)
        for (auto& x : r) x = Rational(rng.integer(-3, 3));
    return Subspace::span(n, rows);
}

}  // namespace

TEST(Subspace, CanonicalBasis) {
    auto a = S(3, {V({1, 1, 0}), V({2, 2, 0}), V({0, 1, 1})});
    auto b = S(3, {V({1, 0, -1}), V({0, 3, 3})});
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.vector(0), V({1, 0, -1}));
    EXPECT_EQ(a.pivots(), (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(member(V({3, 4, 1}), a));
    EXPECT_FALSE(member(V({0, 0, 1}), a));
    EXPECT_EQ(*a.coordinates(V({3, 4, 1})), V({3, 4}));
}

TEST(Subspace, AmbientMismatch) {
    try {
        (void)sum(Subspace::full(3), Subspace::full(4));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(Subspace, LatticeOperations) {
    Rng rng(1);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 6;
        auto a = random_subspace(rng, n, static_cast<std::size_t>(rng.integer(0, 5)));
        auto b = random_subspace(rng, n, static_cast<std::size_t>(rng.integer(0, 5)));
        auto s = sum(a, b), i = intersect(a, b);
        ASSERT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
        ASSERT_TRUE(contains(a, i) && contains(b, i));
        ASSERT_TRUE(contains(s, a) && contains(s, b));
        ASSERT_EQ(a.annihilator().annihilator(), a);
        ASSERT_EQ(a.annihilator().dim(), n - a.dim());
        // direct check of the intersection: solve x A = y B
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(a.vector(r));
        for (std::size_t r = 0; r < b.dim(); ++r) {
            Vector v = b.vector(r);
            for (auto& x : v) x = -x;
            rows.push_back(v);
        }
        if (!rows.empty()) {
            Matrix stacked = Matrix::from_rows(rows, n);
            Matrix ker = nullspace_rows(stacked.transpose());
            std::vector<Vector> meet;
            for (std::size_t r = 0; r < ker.rows(); ++r) {
                Vector v(n);
                for (std::size_t t = 0; t < a.dim(); ++t)
                    for (std::size_t c = 0; c < n; ++c) v[c] += ker(r, t) * a.basis()(t, c);
                meet.push_back(v);
            }
            ASSERT_EQ(Subspace::span(n, meet), i);
        }
    }
}

TEST(Subspace, ProductsAndScaling) {
    auto e = EtaleAlgebra::split(3);
    auto v = S(3, {V({1, 1, 0})});
    auto w = S(3, {V({1, 0, 0}), V({0, 1, 0})});
    EXPECT_EQ(mul_subspaces(v, w, e), w);
    EXPECT_EQ(mul_subspaces(v, S(3, {V({0, 0, 1})}), e).dim(), 0u);
    auto t = e.element(V({1, 2, 3}));
    EXPECT_EQ(scale(t, v), S(3, {V({1, 2, 0})}));
    EXPECT_EQ(plucker(w), V({1, 0, 0}));
    EXPECT_THROW(plucker(v), Error);
}

TEST(Hyperplane, DualAndOrbit) {
    auto e = EtaleAlgebra::split(4);
    auto sum_zero = Subspace::kernel(Matrix::from_rows(std::vector<Vector>{V({1, 1, 1, 1})}, 4));
    auto h = Hyperplane::from_subspace(sum_zero, e);
    EXPECT_EQ(h.dual(), e.one());
    EXPECT_TRUE(h.in_dense_orbit());
    EXPECT_EQ(h.as_subspace(), sum_zero);
    auto coord = Subspace::kernel(Matrix::from_rows(std::vector<Vector>{V({0, 2, 0, 0})}, 4));
    auto hc = Hyperplane::from_subspace(coord, e);
    EXPECT_EQ(hc.dual(), e.basis(1));
    EXPECT_FALSE(hc.in_dense_orbit());
    EXPECT_THROW(Hyperplane::from_subspace(S(4, {V({1, 0, 0, 0})}), e), Error);
}

TEST(Hyperplane, RoundTripThroughDual) {
    Rng rng(6);
    EtaleAlgebra e({Poly({Rational(-2), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)})});
    for (int k = 0; k < 50; ++k) {
        auto c = random_element(rng, e, 4);
        if (c.is_zero()) continue;
        auto h = Hyperplane::from_dual(c);
        ASSERT_EQ(h.as_subspace().dim(), 4u);
        ASSERT_EQ(Hyperplane::from_subspace(h.as_subspace(), e), h);
        ASSERT_EQ(h.in_dense_orbit(), is_unit(c));
        // translating by a unit moves the dual by its inverse
        auto u = random_unit(rng, e, 3);
        auto moved = scale(u, h.as_subspace());
        ASSERT_EQ(Hyperplane::from_subspace(moved, e), Hyperplane::from_dual(c * inverse(u)));
    }
}
