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

#ifndef TMON_BRAUER_HPP
#define TMON_BRAUER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "random.hpp"

namespace tmon {

/// A place of Q: a prime p or the real place.
struct Place {
    bool infinite = true;
    std::uint64_t p = 0;

    static Place infinity() { return {}; }
    static Place prime(std::uint64_t p) { return {false, p}; }

    std::string str() const { return infinite ? "inf" : std::to_string(p); }
    friend bool operator==(const Place&, const Place&) = default;
};

namespace detail {

inline int unit_legendre(const SquareClass& u, std::uint64_t p) {
    int r = u.sign() < 0 ? legendre(-1, p) : 1;
    for (auto q : u.primes()) r *= legendre(static_cast<std::int64_t>(q % p), p);
    return r;
}

inline unsigned unit_mod8(const SquareClass& u) {
    unsigned r = u.sign() < 0 ? 7 : 1;
    for (auto q : u.primes()) r = (r * static_cast<unsigned>(q % 8)) % 8;
    return r;
}

inline int eps2(unsigned u) { return (u == 3 || u == 7) ? 1 : 0; }    // (u-1)/2 mod 2
inline int omega2(unsigned u) { return (u == 3 || u == 5) ? 1 : 0; }  // (u^2-1)/8 mod 2

}  // namespace detail

/// Local Hilbert symbol on square classes.
inline int hilbert_symbol(const SquareClass& a, const SquareClass& b, Place v) {
    if (v.infinite) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    const std::uint64_t p = v.p;
    const int alpha = a.has_prime(p) ? 1 : 0, beta = b.has_prime(p) ? 1 : 0;
    const SquareClass u = a.without(p), w = b.without(p);
    if (p == 2) {
        const unsigned u8 = detail::unit_mod8(u), w8 = detail::unit_mod8(w);
        const int e = detail::eps2(u8) * detail::eps2(w8) + alpha * detail::omega2(w8) + beta * detail::omega2(u8);
        return e % 2 ? -1 : 1;
    }
    int r = (alpha && beta && (p - 1) / 2 % 2 == 1) ? -1 : 1;
    if (beta) r *= detail::unit_legendre(u, p);
    if (alpha) r *= detail::unit_legendre(w, p);
    return r;
}

inline int local_hilbert(const Rational& a, const Rational& b, Place v) {
    if (a.is_zero() || b.is_zero()) fail(ErrorCode::InvalidArgument, "Hilbert symbol of zero");
    if (!v.infinite && !is_prime(v.p)) fail(ErrorCode::NotPrime, std::to_string(v.p) + " is not prime");
    return hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v);
}

/// Is d a square in the completion of Q at v?
inline bool is_local_square(const SquareClass& d, Place v) {
    if (v.infinite) return d.sign() > 0;
    if (d.has_prime(v.p)) return false;
    if (v.p == 2) return detail::unit_mod8(d) == 1;
    return detail::unit_legendre(d, v.p) == 1;
}

struct LocalSymbol {
    Place place;
    int value;
};

/// The symbol algebra (a, b) over Q; i^2 = a, j^2 = b, ij = -ji.
class QuaternionAlgebra {
public:
    static constexpr long long kHeightCap = 1'000'000'000'000LL;

    QuaternionAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.is_zero() || b_.is_zero()) fail(ErrorCode::InvalidArgument, "quaternion symbol entries must be nonzero");
        for (const Rational* q : {&a_, &b_})
            if (q->height() > Integer(static_cast<long>(kHeightCap)))
                fail(ErrorCode::HeightExceeded, q->str() + " exceeds the height cap 10^12");
        ca_ = SquareClass::of(a_);
        cb_ = SquareClass::of(b_);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const SquareClass& a_class() const { return ca_; }
    const SquareClass& b_class() const { return cb_; }

    /// inf, 2 and the odd primes dividing the squarefree parts of a and b.
    std::vector<Place> relevant_places() const {
        std::vector<std::uint64_t> ps{2};
        for (auto p : ca_.primes()) ps.push_back(p);
        for (auto p : cb_.primes()) ps.push_back(p);
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        std::vector<Place> out{Place::infinity()};
        for (auto p : ps) out.push_back(Place::prime(p));
        return out;
    }

    std::string str() const { return "(" + a_.str() + ", " + b_.str() + ")"; }
    friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    Rational a_, b_;
    SquareClass ca_, cb_;
};

inline std::vector<LocalSymbol> local_symbols(const QuaternionAlgebra& A) {
    std::vector<LocalSymbol> out;
    for (const auto& v : A.relevant_places()) out.push_back({v, hilbert_symbol(A.a_class(), A.b_class(), v)});
    return out;
}

/// Places where (a, b) does not split; always an even number of them.
inline std::vector<Place> ramified_places(const QuaternionAlgebra& A) {
    std::vector<Place> out;
    for (const auto& s : local_symbols(A))
        if (s.value == -1) out.push_back(s.place);
    if (out.size() % 2 != 0) fail(ErrorCode::InvariantViolation, "product formula fails for " + A.str());
    return out;
}

inline bool is_division(const QuaternionAlgebra& A) { return !ramified_places(A).empty(); }

/// Does A (x) Q[x]/(x^2 - d) split? For d a square this is Q x Q, which
/// splits A only if A is already split. Otherwise Q(sqrt d) splits A iff no
/// ramified place of A splits in Q(sqrt d), i.e. iff <-d, a, b, -ab> is
/// isotropic everywhere.
inline bool splits_over_quadratic(const QuaternionAlgebra& A, const Rational& d) {
    if (d.is_zero()) fail(ErrorCode::InvalidArgument, "quadratic parameter d = 0");
    auto ram = ramified_places(A);
    if (ram.empty()) return true;
    if (d.is_square()) return false;
    const SquareClass cd = SquareClass::of(d);
    for (const auto& v : ram)
        if (is_local_square(cd, v)) return false;
    return true;
}

/// Is A split by every factor of E? Factors of degree 1 need A split; a
/// quadratic factor x^2 + beta x + gamma needs splitting over its discriminant.
inline bool etale_splits_quaternion(const QuaternionAlgebra& A, const EtaleAlgebra& E) {
    for (std::size_t i = 0; i < E.factor_count(); ++i)
        if (E.factor_degree(i) > 2)
            fail(ErrorCode::UnsupportedFactorDegree, "factor " + std::to_string(i) + " has degree " + std::to_string(E.factor_degree(i)));
    for (std::size_t i = 0; i < E.factor_count(); ++i) {
        const Poly& p = E.factor(i);
        if (p.degree() == 1) {
            if (is_division(A)) return false;
        } else if (!splits_over_quadratic(A, discriminant(p))) {
            return false;
        }
    }
    return true;
}

struct FactorSplitting {
    std::size_t factor;
    Rational discriminant;
    bool splits;
};

/// Evidence that the twisted form attached to `etale` is not retract rational:
/// A is a division algebra and A is split by E.
struct WitnessCertificate {
    std::size_t n = 0;
    std::array<std::size_t, 3> multiplicities{};
    QuaternionAlgebra algebra;
    EtaleAlgebra etale;
    std::vector<LocalSymbol> local_symbols;
    std::vector<Place> ramified;
    std::vector<FactorSplitting> factor_checks;
    bool division = false;
    bool split_by_etale = false;

    bool valid() const { return division && split_by_etale; }
};

/// E = E_1^{n/2-2} x E_2 x E_3 with E_i = Q[x]/(x^2 - a_i), a_3 = a_1 a_2.
inline WitnessCertificate non_retract_witness(std::size_t n, const QuaternionAlgebra& A) {
    if (n < 6 || n % 2 != 0) fail(ErrorCode::InvalidArgument, "n must be even and >= 6, got " + std::to_string(n));
    if (!is_division(A)) fail(ErrorCode::NotDivision, A.str() + " is split");
    const std::array<Rational, 3> as{A.a(), A.b(), A.a() * A.b()};
    for (std::size_t i = 0; i < 3; ++i)
        if (as[i].is_square()) fail(ErrorCode::SquareParameter, "a" + std::to_string(i + 1) + " = " + as[i].str() + " is a square");

    const std::array<std::size_t, 3> mult{n / 2 - 2, 1, 1};
    std::vector<Poly> factors;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < mult[i]; ++k) factors.push_back(Poly({-as[i], Rational(0), Rational(1)}));
    EtaleAlgebra E(std::move(factors));

    WitnessCertificate cert{n, mult, A, E, local_symbols(A), ramified_places(A), {}, false, false};
    cert.division = !cert.ramified.empty();
    bool all = true;
    for (std::size_t i = 0; i < E.factor_count(); ++i) {
        Rational d = discriminant(E.factor(i));
        bool ok = splits_over_quadratic(A, d);
        cert.factor_checks.push_back({i, d, ok});
        all = all && ok;
    }
    cert.split_by_etale = all && etale_splits_quaternion(A, E);
    if (!cert.valid()) fail(ErrorCode::InvariantViolation, "witness for " + A.str() + " failed its own checks");
    return cert;
}

/// The symbol algebra (f(t), g(t)) over Q(t).
class QuaternionOverFt {
public:
    QuaternionOverFt(Poly f, Poly g) : f_(std::move(f)), g_(std::move(g)) {
        if (f_.is_zero() || g_.is_zero()) fail(ErrorCode::ZeroPolynomial, "symbol entries over Q(t) must be nonzero");
    }
    static QuaternionOverFt constant(const Rational& a, const Rational& b) { return {Poly::constant(a), Poly::constant(b)}; }

    const Poly& f() const { return f_; }
    const Poly& g() const { return g_; }

private:
    Poly f_, g_;
};

/// A closed point of the projective t-line: a monic squarefree pi(t) or infinity.
class FtPlace {
public:
    static FtPlace infinity() { return FtPlace(std::nullopt); }
    /// t = c
    static FtPlace at(const Rational& c) { return FtPlace(Poly::linear(c)); }
    static FtPlace finite(const Poly& pi) {
        if (pi.degree() < 1) fail(ErrorCode::InvalidArgument, "place polynomial must have degree >= 1");
        if (pi.lc() != Rational(1)) fail(ErrorCode::NotMonic, pi.str());
        if (!is_squarefree(pi)) fail(ErrorCode::NotSquarefree, pi.str());
        return FtPlace(pi);
    }

    bool is_infinite() const { return !pi_.has_value(); }
    const Poly& pi() const { return *pi_; }
    /// Residue field is Q (degree-one places and infinity).
    bool is_rational() const { return !pi_ || pi_->degree() == 1; }
    /// Only for degree-one places: the c with pi = t - c.
    Rational point() const { return -pi_->coeff(0); }

    std::string str() const { return pi_ ? pi_->str() : "inf"; }
    friend bool operator==(const FtPlace&, const FtPlace&) = default;

private:
    explicit FtPlace(std::optional<Poly> pi) : pi_(std::move(pi)) {}
    std::optional<Poly> pi_;
};

/// Residue of a symbol algebra at a place: a class in F_eta^* / F_eta^*^2.
struct ResidueClass {
    enum class Status { Trivial, Nontrivial, Undecided };

    FtPlace place;
    Status status = Status::Trivial;
    int v_f = 0, v_g = 0;
    /// Square class of the tame symbol when the residue field is Q.
    std::optional<SquareClass> square_class;
    /// Tame symbol reduced modulo pi at places of higher degree.
    Poly representative;

    bool trivial() const { return status == Status::Trivial; }
};

inline std::string to_string(ResidueClass::Status s) {
    switch (s) {
        case ResidueClass::Status::Trivial: return "trivial";
        case ResidueClass::Status::Nontrivial: return "nontrivial";
        case ResidueClass::Status::Undecided: return "undecided";
    }
    return "?";
}

namespace detail {

inline int strip_factor(Poly& f, const Poly& pi) {
    int v = 0;
    while (true) {
        auto [q, r] = divmod(f, pi);
        if (!r.is_zero()) return v;
        f = std::move(q);
        ++v;
    }
}

}  // namespace detail

/// Tame symbol (-1)^{v(f)v(g)} f^{v(g)} / g^{v(f)} evaluated in the residue field.
/// Only the parities of the exponents matter for the square class.
inline ResidueClass tame_residue(const QuaternionOverFt& A, const FtPlace& place) {
    ResidueClass out{place, ResidueClass::Status::Trivial, 0, 0, std::nullopt, Poly()};
    if (place.is_infinite()) {
        out.v_f = -A.f().degree();
        out.v_g = -A.g().degree();
        Rational u((out.v_f * out.v_g) % 2 ? -1 : 1);
        if (out.v_g % 2) u *= A.f().lc();
        if (out.v_f % 2) u *= A.g().lc();
        out.square_class = SquareClass::of(u);
        out.representative = Poly::constant(u);
        out.status = out.square_class->is_trivial() ? ResidueClass::Status::Trivial : ResidueClass::Status::Nontrivial;
        return out;
    }
    const Poly& pi = place.pi();
    Poly f = A.f(), g = A.g();
    out.v_f = detail::strip_factor(f, pi);
    out.v_g = detail::strip_factor(g, pi);
    Poly u = Poly::constant(Rational((out.v_f * out.v_g) % 2 ? -1 : 1));
    if (out.v_g % 2) u = (u * f) % pi;
    if (out.v_f % 2) u = (u * g) % pi;
    out.representative = u;
    if (place.is_rational()) {
        const Rational value = u(place.point());
        out.square_class = SquareClass::of(value);
        out.status = out.square_class->is_trivial() ? ResidueClass::Status::Trivial : ResidueClass::Status::Nontrivial;
    } else {
        out.status = (u == Poly::constant(Rational(1))) ? ResidueClass::Status::Trivial : ResidueClass::Status::Undecided;
    }
    return out;
}

/// A(t0) for a place where A is unramified and both entries are nonzero.
inline QuaternionAlgebra specialize(const QuaternionOverFt& A, const Rational& t0) {
    auto r = tame_residue(A, FtPlace::at(t0));
    if (!r.trivial()) fail(ErrorCode::Ramified, "residue at t = " + t0.str() + " is the class of " + r.square_class->str());
    const Rational fv = A.f()(t0), gv = A.g()(t0);
    if (fv.is_zero() || gv.is_zero()) fail(ErrorCode::ZeroEntry, "symbol entry vanishes at t = " + t0.str());
    return {fv, gv};
}

/// Replay of the argument that a nontrivial residue (b) at a rational place is
/// incompatible with A(t) being split by Q(t)(sqrt a_i) for i = 1, 2, 3:
/// splitting forces (b) = (a_i) for each i, whence (b) = (a_1 a_2 a_3) = 0.
struct ClaimCheck {
    bool contradiction = false;
    bool residue_trivial = true;
    std::optional<SquareClass> b;
    std::array<SquareClass, 3> a_classes{};
    std::array<bool, 3> matches{};
    /// (a_1) + (a_2) + (a_3)
    SquareClass sum;

    explicit operator bool() const { return contradiction; }
};

inline ClaimCheck claim_check(const ResidueClass& residue, const Rational& a1, const Rational& a2) {
    if (!residue.place.is_rational()) fail(ErrorCode::InvalidArgument, "claim check needs a rational residue field");
    if (a1.is_zero() || a2.is_zero()) fail(ErrorCode::InvalidArgument, "a1, a2 must be nonzero");
    ClaimCheck out;
    out.a_classes = {SquareClass::of(a1), SquareClass::of(a2), SquareClass::of(a1 * a2)};
    out.sum = out.a_classes[0] * out.a_classes[1] * out.a_classes[2];
    if (residue.status == ResidueClass::Status::Trivial) return out;
    out.residue_trivial = false;
    out.b = *residue.square_class;
    bool all = true;
    for (std::size_t i = 0; i < 3; ++i) {
        out.matches[i] = (*out.b == out.a_classes[i]);
        all = all && out.matches[i];
    }
    // Either some (a_i) differs from (b), or all agree and (b) = (b)+(b)+(b) = sum is trivial.
    out.contradiction = !all || out.sum.is_trivial();
    return out;
}

/// Odd-degree algebras with factors of degree <= 2 have a degree-one factor,
/// so no division algebra is split by them. Checks this on sampled division algebras.
inline bool h1_triviality_check(const EtaleAlgebra& E, std::size_t samples = 20, std::uint64_t seed = 0) {
    for (std::size_t i = 0; i < E.factor_count(); ++i)
        if (E.factor_degree(i) > 2)
            fail(ErrorCode::UnsupportedFactorDegree, "factor " + std::to_string(i) + " has degree " + std::to_string(E.factor_degree(i)));
    if (E.degree() % 2 == 0) fail(ErrorCode::InvalidArgument, "h1 triviality check expects odd degree");
    Rng rng(seed);
    std::size_t checked = 0;
    while (checked < samples) {
        QuaternionAlgebra A(Rational(rng.nonzero(50)), Rational(rng.nonzero(50)));
        if (!is_division(A)) continue;
        if (etale_splits_quaternion(A, E)) return false;
        ++checked;
    }
    return true;
}

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
inline std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "rational roots of the zero polynomial");
    Integer l(1);
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : f.coeffs()) {
        Rational s = c * Rational(l);
        ic.push_back(s.num());
    }
    std::vector<Rational> roots;
    std::size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    if (lo > 0) roots.emplace_back(0);
    if (ic.size() - lo <= 1) return roots;
    auto divisors = [](Integer v) {
        v = abs(v);
        if (v >= factorization_limit()) fail(ErrorCode::HeightExceeded, "cannot factor " + v.get_str());
        auto ps = factor(v.get_ui());
        std::vector<std::uint64_t> ds{1};
        for (std::size_t i = 0; i < ps.size();) {
            std::size_t j = i;
            while (j < ps.size() && ps[j] == ps[i]) ++j;
            std::size_t cur = ds.size();
            std::uint64_t pk = 1;
            for (std::size_t e = i; e < j; ++e) {
                pk *= ps[i];
                for (std::size_t k = 0; k < cur; ++k) ds.push_back(ds[k] * pk);
            }
            i = j;
        }
        return ds;
    };
    for (auto p : divisors(ic[lo]))
        for (auto q : divisors(ic.back()))
            for (long sgn : {1L, -1L}) {
                Rational r = Rational(Integer(static_cast<unsigned long>(p)) * sgn, Integer(static_cast<unsigned long>(q)));
                if (f(r).is_zero()) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// Residues at the rational roots of f*g, the requested extra points, the
/// remaining (non-linear) part of the squarefree support of f*g, and infinity.
inline std::vector<ResidueClass> residue_table(const QuaternionOverFt& A, const std::vector<Rational>& extra = {}) {
    const Poly fg = A.f() * A.g();
    std::vector<Rational> pts = rational_roots(fg);
    for (const auto& c : extra) pts.push_back(c);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<ResidueClass> out;
    for (const auto& c : pts) out.push_back(tame_residue(A, FtPlace::at(c)));

    Poly rest = fg.degree() > 0 ? (fg / poly_gcd(fg, fg.derivative())).monic() : Poly::constant(Rational(1));
    for (const auto& c : rational_roots(fg)) rest = rest / Poly::linear(c);
    if (rest.degree() >= 1) out.push_back(tame_residue(A, FtPlace::finite(rest.monic())));
    out.push_back(tame_residue(A, FtPlace::infinity()));
    return out;
}

}  // namespace tmon

#endif  // TMON_BRAUER_HPP
