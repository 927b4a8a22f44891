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

#ifndef HALPHEN_ODE_HPP
#define HALPHEN_ODE_HPP

#include <utility>

#include "invariants.hpp"

namespace halphen {

/*
 * Monic linear differential operator of order m with truncated series
 * coefficients,
 *
 *   L u = u^(m) + c_1 u^(m-1) + ... + c_m u ,
 *
 * plus the Halphen-normalised view c_i = C(m, i) p_i. The dictionary with
 * non-inflexional arcs is p_i(t) = (-1)^i i! U_{(1^i)}(t) / U(t).
 */
class DiffOperator {
   public:
    explicit DiffOperator(std::vector<TruncSeries> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("BAD_ODE", "operator needs order >= 1");
        int p = c_.front().precision();
        for (const auto& s : c_) p = std::min(p, s.precision());
        for (auto& s : c_)
            if (s.precision() != p) s = s.truncated(p);
    }

    int order() const { return static_cast<int>(c_.size()); }
    int precision() const { return c_.front().precision(); }

    // c_i for i in [1, m].
    const TruncSeries& coeff(int i) const { return c_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<TruncSeries>& coeffs() const { return c_; }

    TruncSeries halphen_p(int i) const {
        Rational inv_binom = Rational(1) / Rational(binomial(order(), i));
        return inv_binom * coeff(i);
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }

   private:
    std::vector<TruncSeries> c_;
};

inline TruncSeries derive_n(const TruncSeries& f, int k) {
    return Rational(factorial(k)) * divided_derive(f, k);
}

inline TruncSeries apply_operator(const DiffOperator& l, const TruncSeries& u) {
    int m = l.order();
    if (u.precision() <= m) throw PrecisionError(m + 1, "applying an order-" + std::to_string(m) + " operator");
    TruncSeries acc = derive_n(u, m);
    for (int i = 1; i <= m; ++i) {
        TruncSeries term = l.coeff(i) * derive_n(u, m - i);
        acc = acc + term;
    }
    return acc;
}

inline DiffOperator arc_to_ode(const Arc& a) {
    int n = a.n();
    if (a.precision() < n + 2) throw PrecisionError(n + 2, "arc to ODE");
    int k = a.precision() - (n + 1);
    TruncSeries u = wronskian_series(a, k);
    if (u[0] == 0) throw inflexional_error("arc to ODE");
    std::vector<TruncSeries> c;
    for (int i = 1; i <= n + 1; ++i) {
        Partition ones(std::vector<int>(static_cast<std::size_t>(i), 1));
        TruncSeries num = u_lambda_series(a, ones, k);
        Rational factor = Rational(factorial(i)) * Rational(binomial(n + 1, i));
        if (i % 2 == 1) factor = -factor;
        c.push_back(factor * divide(num, u));
    }
    return DiffOperator(std::move(c));
}

// Fundamental basis x_i = t^i/i! + O(t^m) by the power-series recursion;
// output precision is coefficient precision + order.
inline Arc ode_to_arc(const DiffOperator& l) {
    int m = l.order(), k = l.precision();
    int out = k + m;
    std::vector<TruncSeries> coords;
    for (int sol = 0; sol < m; ++sol) {
        std::vector<Rational> u(static_cast<std::size_t>(out));
        u[static_cast<std::size_t>(sol)] = Rational(1) / Rational(factorial(sol));
        for (int j = 0; j + m < out; ++j) {
            // t^j coefficient of u^(m) = -(sum over c_i u^(m-i))_j
            Rational rhs = 0;
            for (int i = 1; i <= m; ++i) {
                for (int ell = 0; ell <= j; ++ell) {
                    const Rational& cl = l.coeff(i)[ell];
                    if (cl == 0) continue;
                    int q = j - ell;
                    // u^(m-i) coefficient q equals u_{q+m-i} (q+m-i)!/q!
                    Rational f = Rational(factorial(q + m - i)) / Rational(factorial(q));
                    rhs += cl * u[static_cast<std::size_t>(q + m - i)] * f;
                }
            }
            u[static_cast<std::size_t>(j + m)] =
                -rhs * Rational(factorial(j)) / Rational(factorial(j + m));
        }
        coords.push_back(TruncSeries(std::move(u)));
    }
    return Arc(std::move(coords));
}

/*
 * Adjoint by the anti-involution fixing multiplication and negating d/dt:
 * the raw image of L = sum_i c_i D^{m-i} is
 *
 *   L~ = sum_i (-1)^{m-i} D^{m-i} m_{c_i} ,
 *
 * expanded by Leibniz and then normalised monic by (-1)^m. The raw image is
 * (-1)^m times the returned operator.
 */
inline DiffOperator adjoint(const DiffOperator& l) {
    int m = l.order();
    std::vector<TruncSeries> q;
    for (int j = 1; j <= m; ++j) {
        TruncSeries acc = TruncSeries::zero(std::max(1, l.precision() - (m - 1)));
        for (int i = 1; i <= j; ++i) {
            // term (-1)^{m-i} binom(m-i, j-i) c_i^{(j-i)}; the i = 0 leading
            // term only feeds q_0 since derivatives of 1 vanish.
            Rational factor = Rational(binomial(m - i, j - i));
            if (factor == 0) continue;
            if ((m - i) % 2 == 1) factor = -factor;
            acc = acc + factor * derive_n(l.coeff(i), j - i);
        }
        // monic normalisation by (-1)^m
        if (m % 2 == 1) acc = -acc;
        q.push_back(acc);
    }
    return DiffOperator(std::move(q));
}

// The displayed closed formula for the adjoint coefficients,
//   q_i = sum_{0<=k<=m-i} (-1)^{i+k} C(m-i-k, k) p_{i+k}^{(k)} ,
// kept verbatim as a comparator against the symbolic adjoint.
inline DiffOperator adjoint_displayed_formula(const DiffOperator& l) {
    int m = l.order();
    std::vector<TruncSeries> q;
    for (int i = 1; i <= m; ++i) {
        TruncSeries acc = TruncSeries::zero(std::max(1, l.precision() - (m - 1)));
        for (int k = 0; k <= m - i; ++k) {
            if (i + k > m) continue;
            Rational factor = Rational(binomial(m - i - k, k));
            if (factor == 0) continue;
            if ((i + k) % 2 == 1) factor = -factor;
            acc = acc + factor * derive_n(l.coeff(i + k), k);
        }
        q.push_back(acc);
    }
    return DiffOperator(std::move(q));
}

/*
 * Constructive bilinear concomitant: the integration-by-parts bookkeeping of
 * (Lu) v gives
 *
 *   B(u, v) = sum_{i=0}^{m-1} sum_{s=0}^{m-i-1} (-1)^s u^{(m-i-1-s)} (c_i v)^{(s)}
 *
 * with c_0 = 1, and by construction
 *
 *   d/dt B(u, v) = (Lu) v - (-1)^m u (adjoint(L) v) .
 */
inline TruncSeries bilinear_B(const DiffOperator& l, const TruncSeries& u, const TruncSeries& v) {
    int m = l.order();
    int p = std::min({u.precision(), v.precision(), l.precision()});
    TruncSeries acc = TruncSeries::zero(std::max(1, p - (m - 1)));
    for (int i = 0; i <= m - 1; ++i) {
        TruncSeries civ = (i == 0) ? v.truncated(p) : l.coeff(i) * v;
        for (int s = 0; s <= m - i - 1; ++s) {
            TruncSeries term = derive_n(u, m - i - 1 - s) * derive_n(civ, s);
            acc = (s % 2 == 0) ? acc + term : acc - term;
        }
    }
    return acc;
}

// The displayed closed formula for B, kept verbatim as a comparator:
//   B(u,v) = sum_{k,l} u^{(k)} v^{(l)} sum_j (-1)^j C(j, k) p_{m-l-j-1}^{(j-k)} .
inline TruncSeries bilinear_B_displayed(const DiffOperator& l, const TruncSeries& u,
                                    const TruncSeries& v) {
    int m = l.order();
    int p = std::min({u.precision(), v.precision(), l.precision()});
    TruncSeries acc = TruncSeries::zero(std::max(1, p - (m - 1)));
    for (int k = 0; k <= m - 1; ++k)
        for (int el = 0; k + el <= m - 1; ++el) {
            TruncSeries inner = TruncSeries::zero(acc.precision());
            bool any = false;
            for (int j = k; j <= m - el - 1; ++j) {
                int idx = m - el - j - 1;  // coefficient index, 0 meaning the leading 1
                Rational factor = Rational(binomial(j, k));
                if (factor == 0) continue;
                if (j % 2 == 1) factor = -factor;
                TruncSeries pterm = (idx == 0)
                                        ? ((j - k) == 0 ? TruncSeries::one(p)
                                                        : TruncSeries::zero(p))
                                        : derive_n(l.coeff(idx), j - k);
                inner = inner + factor * pterm;
                any = true;
            }
            if (!any) continue;
            acc = acc + derive_n(u, k) * derive_n(v, el) * inner;
        }
    return acc;
}

struct GramMatrix {
    QMat matrix;
    Rational det;
};

// G_{ij} = B(x_i, y_j)(0) over the fundamental bases of L and adjoint(L).
inline GramMatrix gram_matrix(const DiffOperator& l) {
    int m = l.order();
    if (l.precision() < 2 * m) throw PrecisionError(2 * m, "Gram matrix");
    Arc x = ode_to_arc(l);
    Arc y = ode_to_arc(adjoint(l));
    QMat g = qmat_zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = bilinear_B(l, x.coord(i), y.coord(j))[0];
    return {g, det_scalar(g)};
}

// Projective equality of two series vectors: all 2x2 minors vanish to
// shared precision and neither side is identically zero.
inline bool series_vectors_proportional(const std::vector<TruncSeries>& a,
                                        const std::vector<TruncSeries>& b) {
    if (a.size() != b.size()) return false;
    bool a_zero = true, b_zero = true;
    for (const auto& s : a) a_zero = a_zero && s.is_zero_to_precision();
    for (const auto& s : b) b_zero = b_zero && s.is_zero_to_precision();
    if (a_zero || b_zero) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            TruncSeries minor = a[i] * b[j] - a[j] * b[i];
            if (!minor.is_zero_to_precision()) return false;
        }
    return true;
}

/*
 * Pluecker duality: the dual arc of the solution arc of L, transported
 * through the Gram pairing, is projectively the solution arc of the
 * adjoint. Concretely G^T (dual coordinates) ~ adjoint fundamental basis.
 */
inline bool plucker_duality_check(const DiffOperator& l) {
    GramMatrix g = gram_matrix(l);
    if (g.det == 0) throw Error("DEGENERATE", "Gram matrix is singular");
    Arc a = ode_to_arc(l);
    Arc d = dual_arc(a);
    Arc b = ode_to_arc(adjoint(l));
    std::vector<TruncSeries> w = transpose(g.matrix) * d.coords();
    int p = std::min(w.front().precision(), b.precision());
    for (auto& s : w) s = s.truncated(p);
    std::vector<TruncSeries> bb;
    for (const auto& s : b.coords()) bb.push_back(s.truncated(p));
    return series_vectors_proportional(w, bb);
}

/*
 * Liouville normalisation: substitute x = phi y with phi = exp(-int p_1) to
 * kill the sub-leading Halphen coefficient. Returns the conjugated monic
 * operator and phi.
 */
inline std::pair<DiffOperator, TruncSeries> liouville_normalize(const DiffOperator& l) {
    int m = l.order();
    TruncSeries p1 = Rational(Rational(1) / Rational(m)) * l.coeff(1);
    TruncSeries phi = exp_series(-antiderivative(p1));
    TruncSeries phi_inv = inverse(phi);
    std::vector<TruncSeries> q;
    for (int j = 1; j <= m; ++j) {
        TruncSeries acc = TruncSeries::zero(std::max(1, phi.precision() - (m - 1)));
        for (int i = 0; i <= j; ++i) {
            Rational factor = Rational(binomial(m - i, j - i));
            if (factor == 0) continue;
            TruncSeries ci = (i == 0) ? TruncSeries::one(l.precision()) : l.coeff(i);
            TruncSeries term = factor * ci * derive_n(phi, j - i);
            acc = acc + term;
        }
        q.push_back(acc * phi_inv);
    }
    DiffOperator out{std::move(q)};
    if (!out.halphen_p(1).is_zero_to_precision())
        throw Error("INTERNAL", "Liouville normalisation failed to kill p_1");
    return {std::move(out), std::move(phi)};
}

}  // namespace halphen

#endif
