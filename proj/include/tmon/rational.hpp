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

#ifndef TMON_RATIONAL_HPP
#define TMON_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace tmon {

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
/// Zero is 0/1. Thin value wrapper over GMP's mpq_class so that every
/// arithmetic result is already canonical.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& v) : v_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Accepts "p", "-p", "p/q" with decimal integers.
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
        auto slash = s.find('/');
        Integer num, den(1);
        auto read = [](const std::string& part, Integer& out) {
            std::string_view digits = part;
            if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
            if (digits.empty()) return false;
            for (char c : digits)
                if (c < '0' || c > '9') return false;
            std::string clean = part[0] == '+' ? part.substr(1) : part;
            return out.set_str(clean, 10) == 0;
        };
        if (slash == std::string::npos) {
            if (!read(s, num)) fail(ErrorCode::ParseError, "bad rational '" + s + "'");
        } else {
            if (!read(s.substr(0, slash), num) || !read(s.substr(slash + 1), den))
                fail(ErrorCode::ParseError, "bad rational '" + s + "'");
            if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
        }
        return Rational(num, den);
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const { return v_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational inverse() const { return Rational(1) / *this; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(unsigned long e) const {
        Rational r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// max(|num|, den)
    Integer height() const {
        Integer n = ::abs(v_.get_num());
        return n > v_.get_den() ? n : Integer(v_.get_den());
    }

    bool is_square() const {
        if (sign() < 0) return false;
        if (sign() == 0) return true;
        return mpz_perfect_square_p(v_.get_num_mpz_t()) && mpz_perfect_square_p(v_.get_den_mpz_t());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace tmon

#endif  // TMON_RATIONAL_HPP
