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

#ifndef HALPHEN_CANONICAL_HPP
#define HALPHEN_CANONICAL_HPP

#include <cmath>
#include <optional>

#include "group.hpp"
#include "invariants.hpp"

namespace halphen {

/*
 * Canonical forms of non-inflexional arcs.
 *
 * normalize_to_B reduces an arc to the slice shape
 *
 *   (1, t, t^2 + O(t^{n+3}), ..., t^n + O(t^{n+3}))
 *
 * realising the unique rational normal curve through the length-(n+3) jet as
 * the standard one. The algorithm is exact and direct:
 *
 *   (i)   a linear map sending the first n+1 Taylor columns to the unit
 *         basis, followed by the chart gauge (scale by 1/x_0, reparametrise
 *         by the reversion of x_1/x_0), leaving (1, t, y_2, ..., y_n) with
 *         y_i = t^i + O(t^{n+1});
 *   (ii)  a unipotent upper-triangular correction X, re-gauged. Writing
 *         eta_0 = sum_j X_{0j} y_j, eta_1 = sum_j X_{1j} y_j and
 *         xi_i = sum_{j>i} X_{ij} y_j, the slice conditions are
 *
 *           N_i = (y_i + xi_i)(1 + eta_0)^{i-1} - (t + eta_1)^i = 0
 *                                                        mod t^{n+3}
 *
 *         for i in [2, n]. The t^{i+j} coefficient of N_i is exactly
 *         (i-1) X_{0j} - i X_{1,j+1} + X_{i,i+j} + (known from earlier
 *         unknowns), which makes the system a triangular exact linear
 *         solve when scanned by the level j = 1..n: the pair
 *         (X_{0j}, X_{1,j+1}) comes from the two equations of degree
 *         i + j in {n+1, n+2} (no X_{i,i+j} entry there; the 2x2
 *         determinant is +-1), and each remaining X_{i,i+j} with
 *         i + j <= n comes from its own equation with unit coefficient.
 *         Level 1 and level n have a single equation: the free parameter
 *         (the residual Borel freedom) is pinned by the pivot convention
 *         X_{12} = 0, and X_{0n} stands alone. Every equation is
 *         re-verified exactly afterwards.
 *
 * The realizing group element is returned as an exact (LinearMap, Scaling,
 * Reparam) triple; applying it to the input reproduces the output verbatim.
 */

struct CanonicalFormB {
    Arc arc;
    GroupTriple group;
    std::vector<Rational> residual;  // t^{n+3} coefficients of coordinates 2..n
};

namespace detail {

// Gauge to the chart (1, t, ...): scale by 1/x_0, reparametrise by the
// reversion of the resulting coordinate 1.
inline GroupTriple chart_gauge(const Arc& a) {
    TruncSeries x0 = a.coord(0);
    if (x0[0] == 0) throw Error("INTERNAL", "chart gauge needs a unit coordinate 0");
    TruncSeries u = inverse(x0);
    TruncSeries w = a.coord(1) * u;
    return {LinearMap::identity(a.n()), Scaling(u), Reparam(revert(w))};
}

inline void expect_chart_form(const Arc& a, const char* where) {
    if (!(a.coord(0) == TruncSeries::one(a.precision())) ||
        !(a.coord(1) == TruncSeries::t(a.precision())))
        throw Error("INTERNAL", std::string(where) + ": chart gauge failed");
}

}  // namespace detail

inline CanonicalFormB normalize_to_B(const Arc& a) {
    int n = a.n(), p = a.precision();
    if (n < 2) throw Error("BAD_DIMENSION", "slice reduction needs ambient dimension >= 2");
    if (p < n + 4) throw PrecisionError(n + 4, "B-slice normalisation");

    QMat head = a.first_columns(n + 1);
    if (det_scalar(head) == 0) throw inflexional_error("B-slice normalisation");

    GroupTriple step1{LinearMap(inverse(head)), Scaling::identity(p), Reparam::identity(p)};
    Arc a1 = step1.apply(a);
    GroupTriple step2 = detail::chart_gauge(a1);
    Arc a2 = step2.apply(a1);
    detail::expect_chart_form(a2, "normalize_to_B");

    // Triangular solve for the unipotent correction X.
    QMat x = qmat_identity(n + 1);

    auto defect = [&](int i, int degree) {
        // t^degree coefficient of (y_i + xi_i)(1 + eta0)^{i-1} - (t + eta1)^i
        int prec = degree + 1;
        TruncSeries eta0 = TruncSeries::zero(prec), eta1 = TruncSeries::zero(prec);
        TruncSeries yi = a2.coord(i).truncated(prec);
        for (int j = 1; j <= n; ++j) {
            if (x(0, j) != 0) eta0 = eta0 + x(0, j) * a2.coord(j).truncated(prec);
            if (j >= 2 && x(1, j) != 0) eta1 = eta1 + x(1, j) * a2.coord(j).truncated(prec);
            if (j > i && x(i, j) != 0) yi = yi + x(i, j) * a2.coord(j).truncated(prec);
        }
        TruncSeries ni = yi * pow_trunc(TruncSeries::one(prec) + eta0, i - 1) -
                         pow_trunc(TruncSeries::t(prec) + eta1, i);
        return ni[degree];
    };

    for (int j = 1; j <= n; ++j) {
        // pair (X_{0j}, X_{1,j+1}) from the X-free equations of this level,
        // the ones of degree i + j in {n+1, n+2}
        int i_lo = std::max(2, n + 1 - j), i_hi = std::min(n, n + 2 - j);
        bool has_beta = (j + 1 <= n);
        if (!has_beta) {
            Rational k = defect(i_lo, i_lo + j);  // i_lo == 2 here
            x(0, j) = -k / Rational(i_lo - 1);
        } else if (i_lo == i_hi) {
            // level 1: one equation, Borel freedom pinned by X_{12} = 0
            Rational k = defect(i_lo, i_lo + j);
            x(1, j + 1) = 0;
            x(0, j) = -k / Rational(i_lo - 1);
        } else {
            // (i-1) X_{0j} - i X_{1,j+1} = -K_i for i = i_lo, i_hi
            Rational k1 = defect(i_lo, i_lo + j), k2 = defect(i_hi, i_hi + j);
            Rational det = Rational(i_lo - 1) * Rational(-i_hi) -
                           Rational(-i_lo) * Rational(i_hi - 1);  // = i_hi - i_lo != 0
            x(0, j) = (Rational(-i_hi) * (-k1) - Rational(-i_lo) * (-k2)) / det;
            x(1, j + 1) = (Rational(i_lo - 1) * (-k2) - Rational(i_hi - 1) * (-k1)) / det;
        }
        // each X_{i, i+j} with i + j <= n from its own unit-pivot equation
        for (int i = 2; i <= n && i + j <= n; ++i) x(i, i + j) = -defect(i, i + j);
    }
    // full verification: Eisenbud-Harris consistency and bookkeeping
    for (int i = 2; i <= n; ++i)
        for (int d = i + 1; d <= n + 2; ++d)
            if (defect(i, d) != 0)
                throw Error("INTERNAL", "B-slice solve inconsistent at (i, d) = (" +
                                            std::to_string(i) + ", " + std::to_string(d) + ")");

    GroupTriple step3{LinearMap(std::move(x)), Scaling::identity(p), Reparam::identity(p)};
    Arc a3 = step3.apply(a2);
    GroupTriple step4 = detail::chart_gauge(a3);
    Arc a4 = step4.apply(a3);
    detail::expect_chart_form(a4, "normalize_to_B");

    std::vector<Rational> residual;
    for (int i = 2; i <= n; ++i) {
        const TruncSeries& y = a4.coord(i);
        for (int k = 0; k <= n + 2; ++k)
            if (y[k] != ((k == i) ? Rational(1) : Rational(0)))
                throw Error("INTERNAL", "B-slice normalisation failed at coordinate " +
                                            std::to_string(i));
        residual.push_back(y[n + 3]);
    }

    GroupTriple total = compose(step4, compose(step3, compose(step2, step1)));
    Arc check = total.apply(a);
    if (!(check == a4)) throw Error("INTERNAL", "composite group element mismatch");
    return {std::move(a4), std::move(total), std::move(residual)};
}

// Monge membership, geometrically: after B-normalisation the last residual
// entry vanishes iff the principal plane lies in the osculating hyperplane.
inline bool monge_member_geometric(const Arc& a) {
    return normalize_to_B(a).residual.back() == 0;
}

/*
 * mu_3 slice: for arcs off the Monge hypersurface the residual Borel action
 * reduces further to
 *
 *   (1, t, ..., t^{n-1} + O(t^{n+4}), t^n + alpha t^{n+3} + O(t^{n+4}))
 *
 * (for n = 2: (1, t, t^2 + alpha t^5 + O(t^7))), and a torus element scales
 * alpha to 1 when alpha admits a rational sixth root gamma: the arc-level
 * transform twists coefficients by (gamma^2)^{k-i} and needs only gamma^2.
 * The class of alpha modulo sixth powers is the obstruction; inexact cases
 * return the alpha-dependent form with `exact` unset.
 */
struct CanonicalFormMu3 {
    Arc arc;
    GroupTriple group;
    Rational alpha;
    bool exact;
};

namespace detail {

// Unipotent Borel element fixing the marked point of the standard curve:
// it maps sigma(t) to (1 + mu t)^n sigma(t/(1 + mu t)), i.e. coordinatewise
// new x_k = sum_{i >= k} C(n-k, i-k) mu^{i-k} x_i.
inline QMat borel_unipotent(int n, const Rational& mu) {
    QMat m = qmat_zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k)
        for (int i = k; i <= n; ++i)
            m(k, i) = Rational(binomial(n - k, i - k)) * pow_rational(mu, i - k);
    return m;
}

// Torus element with gamma^2 = s: coefficient (i, k) twists by s^{k-i};
// realised as (diag(s^{-i}), 1, s t).
inline GroupTriple torus_triple(int n, const Rational& s, int precision) {
    QMat d = qmat_zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) d(i, i) = pow_rational(s, -i);
    return {LinearMap(std::move(d)), Scaling::identity(precision),
            Reparam(s * TruncSeries::t(precision))};
}

// Apply the unipotent Borel element and re-gauge; the B-slice shape is
// preserved (asserted).
inline std::pair<Arc, GroupTriple> borel_move(const Arc& slice_arc, const Rational& mu) {
    int n = slice_arc.n(), p = slice_arc.precision();
    GroupTriple lin{LinearMap(borel_unipotent(n, mu)), Scaling::identity(p),
                    Reparam::identity(p)};
    Arc moved = lin.apply(slice_arc);
    GroupTriple gauge = chart_gauge(moved);
    Arc out = gauge.apply(moved);
    expect_chart_form(out, "borel_move");
    for (int i = 2; i <= n; ++i)
        for (int k = 0; k <= n + 2; ++k)
            if (out.coord(i)[k] != ((k == i) ? Rational(1) : Rational(0)))
                throw Error("INTERNAL", "Borel move left the B-slice");
    return {std::move(out), compose(gauge, lin)};
}

}  // namespace detail

inline CanonicalFormMu3 normalize_to_mu3(const Arc& a) {
    int n = a.n();
    int need = (n == 2) ? 7 : n + 4;
    if (a.precision() < need) throw PrecisionError(need, "mu3-slice normalisation");
    CanonicalFormB b = normalize_to_B(a);
    if (b.residual.back() == 0)
        throw Error("MONGE_MEMBER",
                    "arc lies on the Monge hypersurface; the mu3 slice does not apply");

    // Unipotent step: kill the t^{n+3} coefficient of the penultimate
    // coordinate (n >= 3), or the t^{n+4} coefficient of the last one
    // (n = 2). The target depends affinely on the Borel parameter.
    int target_coord = (n == 2) ? 2 : n - 1;
    int target_degree = (n == 2) ? n + 4 : n + 3;
    auto target = [&](const Arc& arc) { return arc.coord(target_coord)[target_degree]; };

    Rational v0 = target(b.arc);
    auto [arc1_probe, g1_probe] = detail::borel_move(b.arc, Rational(1));
    Rational slope = target(arc1_probe) - v0;
    {
        auto [arc2_probe, g2_probe] = detail::borel_move(b.arc, Rational(2));
        if (target(arc2_probe) != v0 + 2 * slope)
            throw Error("INTERNAL", "Borel action on the target coefficient is not affine");
    }
    if (slope == 0) throw Error("INTERNAL", "degenerate Borel action off the Monge locus");
    Rational mu = -v0 / slope;
    auto [arc_u, g_u] = detail::borel_move(b.arc, mu);
    if (target(arc_u) != 0)
        throw Error("INTERNAL", "unipotent step failed to reach the mu3 slice shape");

    Rational alpha = arc_u.coord(n)[n + 3];
    if (alpha == 0) throw Error("INTERNAL", "alpha vanished off the Monge hypersurface");

    GroupTriple total = compose(g_u, b.group);
    std::optional<Rational> gamma = sixth_root(alpha);
    if (!gamma.has_value()) {
        Arc check = total.apply(a);
        if (!(check == arc_u)) throw Error("INTERNAL", "composite group element mismatch");
        return {std::move(arc_u), std::move(total), std::move(alpha), false};
    }

    // gamma^2 = alpha^{1/3}; the twist s^{k-i} with s = gamma^{-2} scales the
    // (n, n+3) coefficient by s^3 = 1/alpha.
    Rational s = Rational(1) / (*gamma * *gamma);
    GroupTriple g_t = detail::torus_triple(n, s, arc_u.precision());
    Arc arc_t = g_t.apply(arc_u);
    if (arc_t.coord(n)[n + 3] != 1 || target(arc_t) != 0)
        throw Error("INTERNAL", "torus step failed to reach the mu3 slice shape");
    total = compose(g_t, total);
    Arc check = total.apply(a);
    if (!(check == arc_t)) throw Error("INTERNAL", "composite group element mismatch");
    return {std::move(arc_t), std::move(total), std::move(alpha), true};
}

/*
 * Optional floating-point completion for inexact alpha: the torus twist
 * with s = alpha^{-1/3} applied numerically, giving the coefficients of the
 * alpha = 1 form as doubles. This is the only non-exact computation in the
 * library and is never consulted by the exact paths.
 */
inline std::vector<std::vector<double>> mu3_scaling_approx(const CanonicalFormMu3& form) {
    int n = form.arc.n(), p = form.arc.precision();
    double s = 1.0 / std::cbrt(form.alpha.get_d());
    std::vector<std::vector<double>> out;
    for (int i = 0; i <= n; ++i) {
        std::vector<double> row(static_cast<std::size_t>(p));
        for (int k = 0; k < p; ++k)
            row[static_cast<std::size_t>(k)] =
                form.arc.coord(i)[k].get_d() * std::pow(s, k - i);
        out.push_back(std::move(row));
    }
    return out;
}

/*
 * mu_3-orbit equality over Q. The nontrivial torus translates multiply the
 * coefficient c_{i,k} by omega^{k-i} with omega a primitive cube root of
 * unity, so they are rational only when every nonzero coefficient sits at
 * k - i = 0 (mod 3); in that case they coincide with the original. Hence:
 * equal as arcs, or both supported on k - i = 0 (mod 3) and equal there.
 */
inline bool mu3_orbit_equal(const CanonicalFormMu3& x, const CanonicalFormMu3& y) {
    if (!x.exact || !y.exact)
        throw Error("INEXACT", "mu3-orbit comparison needs exactly normalised forms");
    if (x.arc.n() != y.arc.n()) return false;
    int n = x.arc.n();
    int p = std::min(x.arc.precision(), y.arc.precision());
    bool plain_equal = true, twisted_equal = true;
    for (int i = 0; i <= n && (plain_equal || twisted_equal); ++i)
        for (int k = 0; k < p; ++k) {
            const Rational& cx = x.arc.coord(i)[k];
            const Rational& cy = y.arc.coord(i)[k];
            if (cx != cy) plain_equal = false;
            if ((k - i) % 3 == 0) {
                if (cx != cy) twisted_equal = false;
            } else if (cx != 0 || cy != 0) {
                twisted_equal = false;
            }
        }
    return plain_equal || twisted_equal;
}

}  // namespace halphen

#endif
