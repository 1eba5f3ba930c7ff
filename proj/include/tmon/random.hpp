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

#ifndef TMON_RANDOM_HPP
#define TMON_RANDOM_HPP

#include <cstdint>
#include <random>

#include "parametrize.hpp"

namespace tmon {

/// Seeded generator behind every sampled value. Draws are reduced by
/// rejection so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = g_();
        while (x >= limit);
        return lo + static_cast<long>(x % span);
    }
    long nonzero(long height) {
        long v;
        do v = integer(-height, height);
        while (v == 0);
        return v;
    }
    /// p/q with |p| <= height, 1 <= q <= den_height.
    Rational rational(long height, long den_height = 1) { return Rational(integer(-height, height), integer(1, den_height)); }

private:
    std::mt19937_64 g_;
};

inline AlgElement random_element(Rng& rng, const EtaleAlgebra& e, long height) {
    Vector c(e.degree());
    for (auto& x : c) x = Rational(rng.integer(-height, height));
    return e.element(std::move(c));
}

inline AlgElement random_unit(Rng& rng, const EtaleAlgebra& e, long height) {
    while (true) {
        AlgElement u = random_element(rng, e, height);
        if (is_unit(u)) return u;
    }
}

inline TwistedGroupElement random_group_element(Rng& rng, const EtaleAlgebra& e, long height) {
    while (true) {
        TwistedGroupElement::Mat2 g{Rational(rng.integer(-height, height)), Rational(rng.integer(-height, height)),
                                    Rational(rng.integer(-height, height)), Rational(rng.integer(-height, height))};
        if ((g[0] * g[3] - g[1] * g[2]).is_zero()) continue;
        return {g, random_unit(rng, e, height)};
    }
}

inline Configuration random_configuration(Rng& rng, const EtaleAlgebra& e, long height) {
    return {random_element(rng, e, height), random_element(rng, e, height)};
}

}  // namespace tmon

#endif  // TMON_RANDOM_HPP
