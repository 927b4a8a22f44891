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

#ifndef HALPHEN_SERIES_HPP
#define HALPHEN_SERIES_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace halphen {

/*
 * Truncated formal power series over Q. Precision is data, not
 * configuration: a TruncSeries stores exactly `precision` coefficients
 * (t^0 .. t^{precision-1}) and every operation returns the precision it can
 * honestly guarantee — min of the operands for ring operations and
 * composition, one less per differentiation, one more for the formal
 * antiderivative.
 *
 * A series whose stored coefficients all vanish is "zero to precision P"
 * (valuation == precision), never exactly zero.
 */
class TruncSeries {
   public:
    explicit TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("BAD_PRECISION", "series needs at least one coefficient");
    }

    static TruncSeries zero(int precision) {
        return TruncSeries(std::vector<Rational>(check(precision)));
    }

    static TruncSeries constant(const Rational& a, int precision) {
        std::vector<Rational> c(check(precision));
        c[0] = a;
        return TruncSeries(std::move(c));
    }

    static TruncSeries one(int precision) { return constant(Rational(1), precision); }

    // The identity series t.
    static TruncSeries t(int precision) { return monomial(Rational(1), 1, precision); }

    static TruncSeries monomial(const Rational& a, int k, int precision) {
        std::vector<Rational> c(check(precision));
        if (k < 0) throw Error("BAD_PRECISION", "negative exponent");
        if (k < precision) c[k] = a;
        return TruncSeries(std::move(c));
    }

    int precision() const { return static_cast<int>(c_.size()); }

    const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }

    const std::vector<Rational>& coefficients() const { return c_; }

    // Index of the first nonzero coefficient; precision() if none is visible.
    int valuation() const {
        for (int k = 0; k < precision(); ++k)
            if (c_[static_cast<std::size_t>(k)] != 0) return k;
        return precision();
    }

    bool is_zero_to_precision() const { return valuation() == precision(); }

    TruncSeries truncated(int new_precision) const {
        check(new_precision);
        if (new_precision > precision())
            throw PrecisionError(new_precision, "truncation cannot extend a series");
        return TruncSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_precision));
    }

    // Strict equality: same precision and same coefficients.
    friend bool operator==(const TruncSeries& f, const TruncSeries& g) {
        return f.c_ == g.c_;
    }
    friend bool operator!=(const TruncSeries& f, const TruncSeries& g) { return !(f == g); }

    std::string str() const {
        std::ostringstream os;
        bool printed = false;
        for (int k = 0; k < precision(); ++k) {
            const Rational& a = c_[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            if (printed) os << " + ";
            os << to_string(a);
            if (k == 1) os << "*t";
            if (k > 1) os << "*t^" << k;
            printed = true;
        }
        if (!printed) os << "0";
        os << " + O(t^" << precision() << ")";
        return os.str();
    }

   private:
    static int check(int precision) {
        if (precision < 1) throw Error("BAD_PRECISION", "precision must be positive");
        return precision;
    }

    std::vector<Rational> c_;
};

inline bool agree_to_shared_precision(const TruncSeries& f, const TruncSeries& g) {
    int p = std::min(f.precision(), g.precision());
    for (int k = 0; k < p; ++k)
        if (f[k] != g[k]) return false;
    return true;
}

inline TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
    int p = std::min(f.precision(), g.precision());
    std::vector<Rational> c(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) c[static_cast<std::size_t>(k)] = f[k] + g[k];
    return TruncSeries(std::move(c));
}

inline TruncSeries operator-(const TruncSeries& f) {
    std::vector<Rational> c(f.coefficients());
    for (auto& a : c) a = -a;
    return TruncSeries(std::move(c));
}

inline TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) { return f + (-g); }

// Cauchy product truncated to the shared precision.
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
    int p = std::min(f.precision(), g.precision());
    std::vector<Rational> c(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        if (f[i] == 0) continue;
        for (int j = 0; i + j < p; ++j) {
            if (g[j] == 0) continue;
            c[static_cast<std::size_t>(i + j)] += f[i] * g[j];
        }
    }
    return TruncSeries(std::move(c));
}

inline TruncSeries operator*(const Rational& a, const TruncSeries& f) {
    std::vector<Rational> c(f.coefficients());
    for (auto& x : c) x *= a;
    return TruncSeries(std::move(c));
}

inline TruncSeries operator*(const TruncSeries& f, const Rational& a) { return a * f; }

inline TruncSeries pow_trunc(const TruncSeries& f, int e) {
    if (e < 0) throw Error("BAD_EXPONENT", "negative series power");
    TruncSeries r = TruncSeries::one(f.precision());
    for (int k = 0; k < e; ++k) r = r * f;
    return r;
}

// f(g(t)) for valuation(g) >= 1, to the shared precision.
inline TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
    if (g.precision() >= 1 && g[0] != 0)
        throw Error("BAD_COMPOSE", "inner series must have positive valuation");
    int p = std::min(f.precision(), g.precision());
    TruncSeries gt = g.truncated(p);
    TruncSeries r = TruncSeries::constant(f[p - 1], p);
    for (int k = p - 2; k >= 0; --k)
        r = r * gt + TruncSeries::constant(f[k], p);
    return r;
}

// Multiplicative inverse 1/f for a unit series (f(0) != 0).
inline TruncSeries inverse(const TruncSeries& f) {
    if (f[0] == 0) throw Error("NOT_UNIT", "cannot invert a series with zero constant term");
    int p = f.precision();
    std::vector<Rational> g(static_cast<std::size_t>(p));
    g[0] = Rational(1) / f[0];
    for (int k = 1; k < p; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += f[j] * g[static_cast<std::size_t>(k - j)];
        g[static_cast<std::size_t>(k)] = -s / f[0];
    }
    return TruncSeries(std::move(g));
}

inline TruncSeries divide(const TruncSeries& f, const TruncSeries& g) {
    int p = std::min(f.precision(), g.precision());
    return f.truncated(p) * inverse(g.truncated(p));
}

// Compositional inverse: h with g(h(t)) = t + O(t^P). Needs valuation
// exactly 1.
inline TruncSeries revert(const TruncSeries& g) {
    if (g[0] != 0 || g.precision() < 2 || g[1] == 0)
        throw Error("BAD_REVERT", "reversion needs valuation exactly 1");
    int p = g.precision();
    std::vector<Rational> h(static_cast<std::size_t>(p));
    h[1] = Rational(1) / g[1];
    for (int k = 2; k < p; ++k) {
        // g(h_{<k}) agrees with t below degree k; the degree-k defect is
        // linear in h_k with coefficient g_1.
        TruncSeries partial(std::vector<Rational>(h.begin(), h.begin() + k + 1));
        TruncSeries comp = compose(g.truncated(k + 1), partial);
        h[static_cast<std::size_t>(k)] = -comp[k] / g[1];
    }
    return TruncSeries(std::move(h));
}

inline TruncSeries derive(const TruncSeries& f) {
    if (f.precision() < 2) throw PrecisionError(2, "derivative");
    int p = f.precision() - 1;
    std::vector<Rational> c(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) c[static_cast<std::size_t>(k)] = Rational(k + 1) * f[k + 1];
    return TruncSeries(std::move(c));
}

// Divided derivative f^(i)/i!; drops i coefficients of precision.
inline TruncSeries divided_derive(const TruncSeries& f, int i) {
    if (i < 0) throw Error("BAD_EXPONENT", "negative derivative order");
    if (f.precision() - i < 1) throw PrecisionError(i + 1, "divided derivative");
    int p = f.precision() - i;
    std::vector<Rational> c(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k)
        c[static_cast<std::size_t>(k)] =
            Rational(binomial(k + i, i)) * f[k + i];
    return TruncSeries(std::move(c));
}

// Formal antiderivative with constant term 0; gains one coefficient.
inline TruncSeries antiderivative(const TruncSeries& f) {
    int p = f.precision() + 1;
    std::vector<Rational> c(static_cast<std::size_t>(p));
    for (int k = 1; k < p; ++k) c[static_cast<std::size_t>(k)] = f[k - 1] / Rational(k);
    return TruncSeries(std::move(c));
}

// exp(f) for valuation(f) >= 1, via (exp f)' = f' exp f.
inline TruncSeries exp_series(const TruncSeries& f) {
    if (f[0] != 0) throw Error("BAD_EXP", "formal exp needs positive valuation");
    int p = f.precision();
    std::vector<Rational> e(static_cast<std::size_t>(p));
    e[0] = 1;
    for (int k = 1; k < p; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += Rational(j) * f[j] * e[static_cast<std::size_t>(k - j)];
        e[static_cast<std::size_t>(k)] = s / Rational(k);
    }
    return TruncSeries(std::move(e));
}

}  // namespace halphen

#endif
