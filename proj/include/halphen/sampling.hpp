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

#ifndef HALPHEN_SAMPLING_HPP
#define HALPHEN_SAMPLING_HPP

#include <limits>
#include <random>

#include "group.hpp"
#include "invariants.hpp"
#include "ode.hpp"

namespace halphen {

/*
 * Seeded generators for the property suites. std::mt19937_64 has a fully
 * specified sequence and the range reduction below avoids the
 * implementation-defined std::uniform_int_distribution, so a seed pins
 * every sampled object across platforms and runs.
 */
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
        std::uint64_t draw;
        do {
            draw = eng_();
        } while (draw >= limit);
        return lo + static_cast<long>(draw % span);
    }

    Rational rational(long max_num = 6, long max_den = 3) {
        return make_rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational nonzero_rational(long max_num = 6, long max_den = 3) {
        Rational q;
        do { q = rational(max_num, max_den); } while (q == 0);
        return q;
    }

    TruncSeries series(int precision, int min_valuation = 0) {
        std::vector<Rational> c(static_cast<std::size_t>(precision));
        for (int k = min_valuation; k < precision; ++k)
            c[static_cast<std::size_t>(k)] = rational();
        return TruncSeries(std::move(c));
    }

    Scaling unit_scaling(int precision) {
        TruncSeries u = series(precision, 1);
        return Scaling(TruncSeries::constant(nonzero_rational(), precision) + u);
    }

    Reparam reparam(int precision) {
        std::vector<Rational> c(static_cast<std::size_t>(precision));
        c[1] = nonzero_rational();
        for (int k = 2; k < precision; ++k) c[static_cast<std::size_t>(k)] = rational();
        return Reparam(TruncSeries(std::move(c)));
    }

    // Product of random transvections: always in SL(n+1).
    LinearMap sl_map(int n, int moves = 8) {
        QMat m = qmat_identity(n + 1);
        for (int k = 0; k < moves; ++k) {
            int i = static_cast<int>(integer(0, n)), j = static_cast<int>(integer(0, n));
            if (i == j) continue;
            Rational c = rational(3, 2);
            for (int col = 0; col <= n; ++col) m(i, col) += c * m(j, col);
        }
        return LinearMap(std::move(m));
    }

    // SL composed with a nontrivial diagonal: general GL with recorded det.
    LinearMap gl_map(int n) {
        QMat m = sl_map(n).mat;
        for (int i = 0; i <= n; ++i) {
            Rational d = nonzero_rational(4, 2);
            for (int col = 0; col <= n; ++col) m(i, col) *= d;
        }
        return LinearMap(std::move(m));
    }

    GroupTriple group_triple(int n, int precision) {
        return {sl_map(n), unit_scaling(precision), reparam(precision)};
    }

    // Push suitable for mu3-orbit roundtrips: the reparametrisation tangent
    // is a rational square, so the slice parameter alpha stays inside the
    // sixth-power class (general tangents move it through cube classes).
    GroupTriple mu3_friendly_triple(int n, int precision) {
        Rational r = nonzero_rational(3, 2);
        std::vector<Rational> v(static_cast<std::size_t>(precision));
        v[1] = r * r;
        for (int k = 2; k < precision; ++k) v[static_cast<std::size_t>(k)] = rational();
        return {sl_map(n), unit_scaling(precision), Reparam(TruncSeries(std::move(v)))};
    }

    Arc smooth_arc(int n, int precision) {
        for (;;) {
            std::vector<TruncSeries> coords;
            for (int i = 0; i <= n; ++i) coords.push_back(series(precision));
            try {
                return Arc(std::move(coords));
            } catch (const Error&) { /* resample until smooth */ }
        }
    }

    // Random perturbation of the rational normal curve pushed by a random
    // group element: always non-inflexional, generic tail.
    Arc non_inflexional_arc(int n, int precision) {
        for (;;) {
            std::vector<TruncSeries> coords;
            for (int i = 0; i <= n; ++i) {
                std::vector<Rational> c(static_cast<std::size_t>(precision));
                c[static_cast<std::size_t>(i)] = 1;
                for (int k = n + 1; k < precision; ++k)
                    c[static_cast<std::size_t>(k)] = rational();
                coords.push_back(TruncSeries(std::move(c)));
            }
            Arc a = group_triple(n, precision).apply(Arc(std::move(coords)));
            if (wronskian(a) != 0) return a;
        }
    }

    std::vector<int> random_gaps(int n, int max_gap) {
        // smoothness forces i0 = 0, i1 = 1; gaps are non-decreasing
        std::vector<int> gaps(static_cast<std::size_t>(n + 1), 0);
        for (int j = 2; j <= n; ++j)
            gaps[static_cast<std::size_t>(j)] =
                std::max(gaps[static_cast<std::size_t>(j - 1)],
                         static_cast<int>(integer(0, max_gap)));
        return gaps;
    }

    // Arc whose greedy independence indices are exactly i_j = j + gaps[j].
    Arc arc_with_gaps(int n, const std::vector<int>& gaps, int precision) {
        std::vector<int> idx;
        for (int j = 0; j <= n; ++j) idx.push_back(j + gaps[static_cast<std::size_t>(j)]);
        if (idx.back() + 1 > precision)
            throw PrecisionError(idx.back() + 1, "gap construction");
        // column k may use coordinates whose index i_l < k is already active;
        // column i_l gets leading entry 1 in coordinate l.
        QMat cols = qmat_zero(n + 1, precision);
        for (int k = 0; k < precision; ++k) {
            int active = 0;
            while (active <= n && idx[static_cast<std::size_t>(active)] < k) ++active;
            bool is_lead = active <= n && idx[static_cast<std::size_t>(active)] == k;
            for (int l = 0; l < active; ++l) cols(l, k) = rational();
            if (is_lead) cols(active, k) = 1;
        }
        std::vector<TruncSeries> coords;
        for (int i = 0; i <= n; ++i) {
            std::vector<Rational> c(static_cast<std::size_t>(precision));
            for (int k = 0; k < precision; ++k) c[static_cast<std::size_t>(k)] = cols(i, k);
            coords.push_back(TruncSeries(std::move(c)));
        }
        // gap structure is invariant under the group action
        return group_triple(n, precision).apply(Arc(std::move(coords)));
    }

    // B-slice shapes per the order-(n+4) normal form: last coordinate's
    // t^{n+3} coefficient decides Monge membership. Pushed by a random
    // composite for genericity.
    Arc monge_arc(int n, int precision, bool member) {
        std::vector<TruncSeries> coords;
        coords.push_back(TruncSeries::one(precision));
        coords.push_back(TruncSeries::t(precision));
        for (int i = 2; i <= n; ++i) {
            std::vector<Rational> c(static_cast<std::size_t>(precision));
            c[static_cast<std::size_t>(i)] = 1;
            int from = (i == n) ? n + 4 : n + 3;
            for (int k = from; k < precision; ++k) c[static_cast<std::size_t>(k)] = rational();
            if (i == n && !member && n + 3 < precision)
                c[static_cast<std::size_t>(n + 3)] = nonzero_rational();
            coords.push_back(TruncSeries(std::move(c)));
        }
        return group_triple(n, precision).apply(Arc(std::move(coords)));
    }

    DiffOperator third_order_operator(int coeff_precision, bool liouville = false) {
        std::vector<TruncSeries> c;
        c.push_back(liouville ? TruncSeries::zero(coeff_precision) : series(coeff_precision));
        c.push_back(series(coeff_precision));
        c.push_back(series(coeff_precision));
        return DiffOperator(std::move(c));
    }

    DiffOperator operator_of_order(int m, int coeff_precision) {
        std::vector<TruncSeries> c;
        for (int i = 0; i < m; ++i) c.push_back(series(coeff_precision));
        return DiffOperator(std::move(c));
    }

    std::mt19937_64& engine() { return eng_; }

   private:
    std::mt19937_64 eng_;
};

}  // namespace halphen

#endif
