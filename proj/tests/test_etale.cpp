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

Rational R(long v) { return Rational(v); }

EtaleAlgebra pure_quintic() { return EtaleAlgebra({Poly({R(-2), R(0), R(0), R(0), R(0), R(1)})}); }

EtaleAlgebra mixed_septic() {
    return EtaleAlgebra({Poly({R(-2), R(0), R(1)}), Poly({R(1), R(0), R(1)}), Poly::linear(R(0)), Poly::linear(R(1)), Poly::linear(R(2))});
}

AlgElement el(const EtaleAlgebra& e, std::initializer_list<long> c) {
    Vector v;
    for (long x : c) v.emplace_back(x);
    return e.element(v);
}

void expect_code(ErrorCode code, auto&& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

TEST(Etale, Construction) {
    EXPECT_EQ(mixed_septic().degree(), 7u);
    EXPECT_EQ(mixed_septic().offset(2), 4u);
    expect_code(ErrorCode::NotSquarefree, [] { EtaleAlgebra({Poly({R(1), R(-2), R(1)})}); });
    expect_code(ErrorCode::NotMonic, [] { EtaleAlgebra({Poly({R(1), R(2)})}); });
    expect_code(ErrorCode::InvalidArgument, [] { EtaleAlgebra(std::vector<Poly>{}); });
}

TEST(Etale, PureQuinticArithmetic) {
    auto e = pure_quintic();
    auto x = e.basis(1);
    EXPECT_EQ(x * e.basis(4), R(2) * e.one());
    EXPECT_EQ(x.pow(5), R(2) * e.one());
    EXPECT_EQ(inverse(x), Rational(1, 2) * e.basis(4));
    EXPECT_EQ(char_poly(x), Poly({R(-2), R(0), R(0), R(0), R(0), R(1)}));
    EXPECT_EQ(trace(x), R(0));
    EXPECT_EQ(trace(e.one()), R(5));
    EXPECT_EQ(norm(x), R(2));
    EXPECT_EQ(norm(x + e.one()), R(3));
    EXPECT_TRUE(has_distinct_eigenvalues(x));
    EXPECT_FALSE(has_distinct_eigenvalues(R(3) * e.one()));
}

TEST(Etale, SplitArithmetic) {
    auto e = EtaleAlgebra::split(3);
    auto u = el(e, {1, 2, 3}), v = el(e, {2, 0, -1});
    EXPECT_EQ(u * v, el(e, {2, 0, -3}));
    EXPECT_EQ(norm(u), R(6));
    EXPECT_EQ(trace(u), R(6));
    EXPECT_EQ(inverse(u), e.element({R(1), Rational(1, 2), Rational(1, 3)}));
    EXPECT_FALSE(is_unit(v));
    EXPECT_FALSE(has_distinct_eigenvalues(el(e, {1, 1, 2})));
    try {
        (void)inverse(v);
        ADD_FAILURE();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::NotAUnit);
        EXPECT_NE(std::string(err.what()).find('1'), std::string::npos);
    }
}

TEST(Etale, ParentMismatch) {
    auto a = EtaleAlgebra::split(5);
    auto b = pure_quintic();
    expect_code(ErrorCode::ParentMismatch, [&] { (void)(a.one() + b.one()); });
    expect_code(ErrorCode::ParentMismatch, [&] { (void)(a.one() * b.one()); });
}

TEST(Etale, TraceGram) {
    auto e = pure_quintic();
    const Matrix& g = e.trace_gram();
    EXPECT_EQ(g(0, 0), R(5));
    EXPECT_EQ(g(1, 4), R(10));
    EXPECT_EQ(g(1, 1), R(0));
    auto m = mixed_septic();
    EXPECT_EQ(m.trace_gram()(3, 3), R(-2));
    EXPECT_EQ(m.trace_gram()(1, 1), R(4));
    for (const auto& alg : {e, m, EtaleAlgebra::split(7)}) EXPECT_NE(det(alg.trace_gram()), R(0));
}

TEST(Etale, TraceGramMatchesTraceOfProducts) {
    for (const auto& e : {pure_quintic(), mixed_septic()}) {
        for (std::size_t i = 0; i < e.degree(); ++i)
            for (std::size_t j = 0; j < e.degree(); ++j) ASSERT_EQ(e.trace_gram()(i, j), trace(e.basis(i) * e.basis(j)));
    }
}

TEST(Etale, TraceDualRepresentsFunctional) {
    Rng rng(4);
    for (const auto& e : {pure_quintic(), mixed_septic()}) {
        for (int k = 0; k < 20; ++k) {
            Vector ell(e.degree());
            for (auto& v : ell) v = rng.rational(5, 3);
            AlgElement c = trace_dual(e, ell);
            for (std::size_t j = 0; j < e.degree(); ++j) ASSERT_EQ(trace(c * e.basis(j)), ell[j]);
            ASSERT_EQ(trace_functional(c), ell);
        }
    }
}

TEST(Etale, RingAxioms) {
    Rng rng(9);
    for (const auto& e : {pure_quintic(), mixed_septic(), EtaleAlgebra::split(5)}) {
        for (int k = 0; k < 100; ++k) {
            auto u = random_element(rng, e, 5), v = random_element(rng, e, 5), w = random_element(rng, e, 5);
            ASSERT_EQ((u * v) * w, u * (v * w));
            ASSERT_EQ(u * v, v * u);
            ASSERT_EQ(u * (v + w), u * v + u * w);
            ASSERT_EQ(u * e.one(), u);
        }
    }
}

TEST(Etale, NormAndInverse) {
    Rng rng(10);
    for (const auto& e : {pure_quintic(), mixed_septic(), EtaleAlgebra::split(5)}) {
        for (int k = 0; k < 50; ++k) {
            auto u = random_element(rng, e, 2);
            auto v = random_element(rng, e, 2);
            ASSERT_EQ(norm(u * v), norm(u) * norm(v));
            ASSERT_EQ(trace(u + v), trace(u) + trace(v));
            if (is_unit(u))
                ASSERT_EQ(u * inverse(u), e.one());
            else
                ASSERT_THROW(inverse(u), Error);
        }
    }
}

TEST(Etale, CayleyHamilton) {
    Rng rng(12);
    for (const auto& e : {pure_quintic(), mixed_septic()}) {
        for (int k = 0; k < 20; ++k) {
            auto u = random_element(rng, e, 4);
            Poly chi = char_poly(u);
            AlgElement acc = e.zero(), pw = e.one();
            for (int d = 0; d <= chi.degree(); ++d) {
                acc = acc + chi.coeff(static_cast<std::size_t>(d)) * pw;
                pw = pw * u;
            }
            ASSERT_TRUE(acc.is_zero());
            ASSERT_EQ(-chi.coeff(e.degree() - 1), trace(u));
        }
    }
}

TEST(FindGenerator, ReturnsDistinctEigenvalues) {
    for (const auto& e : {pure_quintic(), mixed_septic(), EtaleAlgebra::split(5), EtaleAlgebra::split(9)}) {
        for (std::uint64_t seed : {0u, 1u, 5u}) {
            auto a = find_generator(e, seed);
            EXPECT_TRUE(has_distinct_eigenvalues(a));
            EXPECT_EQ(find_generator(e, seed), a);
        }
        EXPECT_NE(find_generator(e, 0), find_generator(e, 1));
    }
}

TEST(FindGenerator, FrozenValues) {
    EXPECT_EQ(find_generator(EtaleAlgebra::split(5)), el(EtaleAlgebra::split(5), {-2, -1, 0, 1, 2}));
    EXPECT_EQ(find_generator(pure_quintic()), el(pure_quintic(), {-1, -1, -1, -1, -1}));
    EtaleAlgebra q({Poly::linear(R(3))});
    EXPECT_EQ(find_generator(q), q.zero());
}
