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

#ifndef TMON_ARITH_HPP
#define TMON_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rational.hpp"

namespace tmon {

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Brent's cycle finding on x -> x^2 + c.
inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::size_t r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = f(y);
            std::size_t k = 0;
            do {
                ys = y;
                for (std::size_t i = 0; i < std::min<std::size_t>(128, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += 128;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
    using namespace detail;
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

/// Prime factors with multiplicity, ascending. Trial division by small primes,
/// then Pollard rho.
inline std::vector<std::uint64_t> factor(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    std::vector<std::uint64_t> stack{n};
    while (!stack.empty()) {
        std::uint64_t m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            out.push_back(m);
            continue;
        }
        std::uint64_t d = detail::pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Legendre symbol (a | p) for an odd prime p.
inline int legendre(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    return detail::powmod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Largest integer for which square classes are computed.
inline const Integer& factorization_limit() {
    static const Integer limit = Integer(1) << 62;
    return limit;
}

/// Class of a nonzero rational in Q^* / Q^*^2, represented by its squarefree
/// integer: a sign and the ascending list of primes with odd exponent.
class SquareClass {
public:
    SquareClass() = default;

    static SquareClass of(const Rational& q) {
        if (q.is_zero()) fail(ErrorCode::InvalidArgument, "square class of zero");
        SquareClass c;
        c.sign_ = q.sign();
        static_assert(sizeof(unsigned long) >= 8, "square classes assume a 64-bit unsigned long");
        const Integer n = abs(q.num()), d = q.den();
        for (const Integer& v : {n, d}) {
            if (v >= factorization_limit()) fail(ErrorCode::HeightExceeded, "cannot factor " + v.get_str());
            auto f = factor(static_cast<std::uint64_t>(v.get_ui()));
            for (std::size_t i = 0; i < f.size();) {
                std::size_t j = i;
                while (j < f.size() && f[j] == f[i]) ++j;
                if ((j - i) % 2 == 1) c.toggle(f[i]);
                i = j;
            }
        }
        return c;
    }

    static SquareClass of(long v) { return of(Rational(v)); }

    int sign() const { return sign_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    bool is_trivial() const { return sign_ == 1 && primes_.empty(); }
    bool has_prime(std::uint64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

    /// The class with p removed (u where this = p^alpha * u).
    SquareClass without(std::uint64_t p) const {
        SquareClass c = *this;
        auto it = std::lower_bound(c.primes_.begin(), c.primes_.end(), p);
        if (it != c.primes_.end() && *it == p) c.primes_.erase(it);
        return c;
    }

    friend SquareClass operator*(SquareClass a, const SquareClass& b) {
        a.sign_ *= b.sign_;
        for (auto p : b.primes_) a.toggle(p);
        return a;
    }

    /// The squarefree integer representative.
    Integer representative() const {
        Integer r(sign_);
        for (auto p : primes_) r *= Integer(static_cast<unsigned long>(p));
        return r;
    }
    std::string str() const { return representative().get_str(); }

    friend bool operator==(const SquareClass&, const SquareClass&) = default;

private:
    void toggle(std::uint64_t p) {
        auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
        if (it != primes_.end() && *it == p)
            primes_.erase(it);
        else
            primes_.insert(it, p);
    }

    int sign_ = 1;
    std::vector<std::uint64_t> primes_;
};

}  // namespace tmon

#endif  // TMON_ARITH_HPP
