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

#ifndef HALPHEN_INVARIANT_POLY_HPP
#define HALPHEN_INVARIANT_POLY_HPP

#include <algorithm>
#include <map>

#include "group.hpp"
#include "invariants.hpp"

namespace halphen {

/*
 * Formal polynomial in the U_lambda with rational coefficients, bihomogeneous
 * of a declared reduced bidegree (d, p): every monomial is a product of
 * exactly d Pluecker coordinates of total weight p. Monomials are sorted
 * multisets of partitions; no reduction modulo Pluecker relations is
 * attempted — equality of invariants is decided by evaluation.
 */
class InvariantPoly {
   public:
    using Monomial = std::vector<Partition>;  // kept sorted
    using Terms = std::map<Monomial, Rational>;

    InvariantPoly(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
        prune();
        if (terms_.empty()) {
            d_ = 0;
            p_ = 0;
            return;
        }
        d_ = static_cast<long>(terms_.begin()->first.size());
        p_ = weight_of(terms_.begin()->first);
        for (const auto& [mono, coeff] : terms_) {
            if (static_cast<long>(mono.size()) != d_ || weight_of(mono) != p_)
                throw Error("BIDEGREE",
                            "polynomial is not bihomogeneous: mixed reduced bidegrees");
            for (const Partition& lambda : mono) check_partition_fits(lambda, n_);
        }
    }

    static InvariantPoly zero(int n) { return InvariantPoly(n, Terms{}); }

    static InvariantPoly scalar(int n, const Rational& c) {
        Terms t;
        if (c != 0) t[{}] = c;
        return InvariantPoly(n, std::move(t));
    }

    static InvariantPoly coordinate(int n, const Partition& lambda) {
        Terms t;
        t[{lambda}] = 1;
        return InvariantPoly(n, std::move(t));
    }

    // U^2 (U_3 + 2 U_21 + U_111) - 3 U U_1 (U_11 + U_2) + 2 U_1^3
    static InvariantPoly monge(int n) {
        Partition e{}, l1{1}, l2{2}, l3{3}, l11{1, 1}, l21{2, 1}, l111{1, 1, 1};
        Terms t;
        t[sorted({e, e, l3})] = 1;
        t[sorted({e, e, l21})] = 2;
        t[sorted({e, e, l111})] = 1;
        t[sorted({e, l1, l11})] = -3;
        t[sorted({e, l1, l2})] = -3;
        t[sorted({l1, l1, l1})] = 2;
        return InvariantPoly(n, std::move(t));
    }

    int n() const { return n_; }
    long reduced_degree() const { return d_; }
    long reduced_weight() const { return p_; }
    Bidegree bidegree() const { return Bidegree::reduced(n_, d_, p_); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int max_part() const {
        int m = 0;
        for (const auto& [mono, coeff] : terms_)
            for (const Partition& lambda : mono) m = std::max(m, lambda.largest());
        return m;
    }

    Rational eval(const Arc& a) const {
        if (a.n() != n_)
            throw Error("BAD_DIMENSION", "expression is declared for ambient dimension " +
                                              std::to_string(n_));
        std::map<Partition, Rational> cache;
        Rational total = 0;
        for (const auto& [mono, coeff] : terms_) {
            Rational prod = coeff;
            for (const Partition& lambda : mono) {
                auto it = cache.find(lambda);
                if (it == cache.end()) it = cache.emplace(lambda, u_lambda(a, lambda)).first;
                prod *= it->second;
            }
            total += prod;
        }
        return total;
    }

    // The same polynomial one dimension up (partitions re-pad implicitly);
    // reduced bidegree is preserved.
    InvariantPoly iota() const { return InvariantPoly(n_ + 1, terms_); }

    // Character chi(g) of O(delta, varpi): det(M)^d, u0^delta, v1^varpi.
    Rational character(const GroupElement& g) const {
        Bidegree b = bidegree();
        if (const auto* lin = std::get_if<LinearMap>(&g)) return pow_rational(lin->det, d_);
        if (const auto* sc = std::get_if<Scaling>(&g)) return pow_rational(sc->u[0], b.degree);
        const auto& rp = std::get<Reparam>(g);
        return pow_rational(rp.v[1], b.weight);
    }

    friend InvariantPoly operator+(const InvariantPoly& a, const InvariantPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.n_ != b.n_) throw Error("BAD_DIMENSION", "mixed ambient dimensions");
        if (a.d_ != b.d_ || a.p_ != b.p_)
            throw Error("BIDEGREE", "cannot add invariants of different reduced bidegrees (" +
                                        std::to_string(a.d_) + "," + std::to_string(a.p_) +
                                        ") and (" + std::to_string(b.d_) + "," +
                                        std::to_string(b.p_) + ")");
        Terms t = a.terms_;
        for (const auto& [mono, coeff] : b.terms_) t[mono] += coeff;
        return InvariantPoly(a.n_, std::move(t));
    }

    friend InvariantPoly operator-(const InvariantPoly& a) {
        Terms t = a.terms_;
        for (auto& [mono, coeff] : t) coeff = -coeff;
        return InvariantPoly(a.n_, std::move(t));
    }

    friend InvariantPoly operator-(const InvariantPoly& a, const InvariantPoly& b) {
        return a + (-b);
    }

    friend InvariantPoly operator*(const InvariantPoly& a, const InvariantPoly& b) {
        if (a.n_ != b.n_) throw Error("BAD_DIMENSION", "mixed ambient dimensions");
        Terms t;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.begin(), m.end());
                t[m] += ca * cb;
            }
        return InvariantPoly(a.n_, std::move(t));
    }

    friend InvariantPoly operator*(const Rational& c, const InvariantPoly& a) {
        Terms t = a.terms_;
        for (auto& [mono, coeff] : t) coeff *= c;
        return InvariantPoly(a.n_, std::move(t));
    }

    InvariantPoly pow(int e) const {
        if (e < 0) throw Error("BAD_EXPONENT", "negative power of an invariant");
        InvariantPoly r = scalar(n_, 1);
        for (int k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [mono, coeff] : terms_) {
            if (!first) s += " + ";
            s += to_string(coeff);
            for (const Partition& lambda : mono) s += "*" + lambda.token();
            first = false;
        }
        return s;
    }

   private:
    static Monomial sorted(Monomial m) {
        std::sort(m.begin(), m.end());
        return m;
    }

    static long weight_of(const Monomial& m) {
        long w = 0;
        for (const Partition& lambda : m) w += lambda.weight();
        return w;
    }

    void prune() {
        Terms clean;
        for (const auto& [mono, coeff] : terms_) {
            if (coeff == 0) continue;
            Monomial m = mono;
            std::sort(m.begin(), m.end());
            clean[std::move(m)] += coeff;
        }
        for (auto it = clean.begin(); it != clean.end();)
            it = (it->second == 0) ? clean.erase(it) : std::next(it);
        terms_ = std::move(clean);
    }

    int n_;
    long d_ = 0, p_ = 0;
    Terms terms_;
};

// (I(g a), chi(g) I(a)): equal for covariant expressions.
inline std::pair<Rational, Rational> transformation_check(const InvariantPoly& inv, const Arc& a,
                                                          const GroupElement& g) {
    return {inv.eval(act(g, a)), inv.character(g) * inv.eval(a)};
}

}  // namespace halphen

#endif
