/*
   Copyright 2026 The Halphen Library Authors

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

#ifndef HALPHEN_RATIONAL_HPP
#define HALPHEN_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>

#include "error.hpp"

namespace halphen {

// Exact rationals of arbitrary size. mpq_class keeps values canonical
// (reduced, positive denominator) through arithmetic; constructors from raw
// numerator/denominator go through make_rational so canonicalisation is
// never skipped.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("BAD_RATIONAL", "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("BAD_RATIONAL", "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Serialized form is "a" or "a/b", canonical. Parsing is lenient about
// non-canonical input ("2/4", "1/-2") but rejects malformed text.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("BAD_RATIONAL", "empty rational literal");
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw Error("BAD_RATIONAL", "malformed rational: " + text);
        Rational q(text);
        q.canonicalize();
        return q;
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw Error("BAD_RATIONAL", "malformed rational: " + text);
    Integer n(num), d(den);
    return make_rational(n, d);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(long n) {
    Integer r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw Error("BAD_RATIONAL", "zero to a negative power");
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r = 1, acc = base;
    while (n) {
        if (n & 1) r *= acc;
        acc *= acc;
        n >>= 1;
    }
    return r;
}

// Exact k-th root of a non-negative rational, if one exists over Q.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rational(0);
    Integer num = q.get_num(), den = q.get_den();
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
    return make_rational(rn, rd);
}

inline std::optional<Rational> sixth_root(const Rational& q) { return exact_root(q, 6); }

}  // namespace halphen

#endif
