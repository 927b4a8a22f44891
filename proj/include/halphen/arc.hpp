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

#ifndef HALPHEN_ARC_HPP
#define HALPHEN_ARC_HPP

#include <utility>
#include <vector>

#include "matrix.hpp"
#include "series.hpp"

namespace halphen {

/*
 * A parametrised smooth arc in P_n: n+1 coordinate series of a common
 * precision P, with the smoothness condition a0 ^ a1 != 0 on the first two
 * Taylor columns. The column view a_j (the vector of t^j coefficients) is
 * what the invariant determinants consume.
 */
class Arc {
   public:
    explicit Arc(std::vector<TruncSeries> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw Error("BAD_ARC", "arc needs at least one coordinate");
        int p = coords_.front().precision();
        for (const auto& s : coords_) p = std::min(p, s.precision());
        for (auto& s : coords_)
            if (s.precision() != p) s = s.truncated(p);
        if (n() >= 1) {
            if (p < 2) throw PrecisionError(2, "smooth arc");
            QMat m = first_columns(2);
            if (rank(m) != 2) throw Error("NOT_SMOOTH", "a0 and a1 are dependent");
        } else if (coords_.front().is_zero_to_precision()) {
            throw Error("NOT_SMOOTH", "zero point");
        }
    }

    int n() const { return static_cast<int>(coords_.size()) - 1; }
    int precision() const { return coords_.front().precision(); }

    const TruncSeries& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }
    const std::vector<TruncSeries>& coords() const { return coords_; }

    // Taylor column a_j in Q^{n+1}.
    std::vector<Rational> column(int j) const {
        std::vector<Rational> v;
        v.reserve(coords_.size());
        for (const auto& s : coords_) v.push_back(s[j]);
        return v;
    }

    // (n+1) x k matrix of the first k columns.
    QMat first_columns(int k) const {
        QMat m = qmat_zero(n() + 1, k);
        for (int i = 0; i <= n(); ++i)
            for (int j = 0; j < k; ++j) m(i, j) = coord(i)[j];
        return m;
    }

    Arc truncated(int p) const {
        std::vector<TruncSeries> c;
        c.reserve(coords_.size());
        for (const auto& s : coords_) c.push_back(s.truncated(p));
        return Arc(std::move(c));
    }

    friend bool operator==(const Arc& a, const Arc& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Arc& a, const Arc& b) { return !(a == b); }

   private:
    std::vector<TruncSeries> coords_;
};

// Rational normal curve (1, t, ..., t^n), zero-padded to the precision.
inline Arc rational_normal_curve(int n, int precision) {
    std::vector<TruncSeries> c;
    for (int i = 0; i <= n; ++i) c.push_back(TruncSeries::monomial(Rational(1), i, precision));
    return Arc(std::move(c));
}

// All coordinates projectively proportional to shared precision: every 2x2
// minor of the paired coordinate matrix vanishes, and neither side is zero.
inline bool projectively_equal(const Arc& a, const Arc& b) {
    if (a.n() != b.n()) return false;
    bool a_zero = true, b_zero = true;
    for (int i = 0; i <= a.n(); ++i) {
        if (!a.coord(i).is_zero_to_precision()) a_zero = false;
        if (!b.coord(i).is_zero_to_precision()) b_zero = false;
    }
    if (a_zero || b_zero) return false;
    for (int i = 0; i <= a.n(); ++i)
        for (int j = i + 1; j <= a.n(); ++j) {
            TruncSeries minor = a.coord(i) * b.coord(j) - a.coord(j) * b.coord(i);
            if (!minor.is_zero_to_precision()) return false;
        }
    return true;
}

struct GapSequence {
    std::vector<int> indices;  // i_0 < i_1 < ... < i_n
    std::vector<int> gaps;     // i_j - j
    int total = 0;
};

// Greedy independence indices of the Taylor columns; errors out when the
// flag does not fill up within the known coefficients.
inline GapSequence gap_sequence(const Arc& a) {
    int n = a.n(), p = a.precision();
    GapSequence g;
    std::vector<std::vector<Rational>> echelon;  // reduced rows of picked columns
    std::vector<int> pivots;
    for (int j = 0; j < p && static_cast<int>(g.indices.size()) < n + 1; ++j) {
        std::vector<Rational> v = a.column(j);
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            int piv = pivots[r];
            if (v[static_cast<std::size_t>(piv)] == 0) continue;
            Rational f = v[static_cast<std::size_t>(piv)] /
                         echelon[r][static_cast<std::size_t>(piv)];
            for (int i = 0; i <= n; ++i)
                v[static_cast<std::size_t>(i)] -= f * echelon[r][static_cast<std::size_t>(i)];
        }
        int piv = -1;
        for (int i = 0; i <= n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        echelon.push_back(v);
        pivots.push_back(piv);
        g.indices.push_back(j);
    }
    if (static_cast<int>(g.indices.size()) < n + 1)
        throw Error("INFLEXIONAL_BEYOND_PRECISION",
                    "cannot find " + std::to_string(n + 1) + " independent columns within precision");
    for (int j = 0; j <= n; ++j) {
        g.gaps.push_back(g.indices[static_cast<std::size_t>(j)] - j);
        g.total += g.gaps.back();
    }
    return g;
}

// Projection away from the point a(0) into the hyperplane chart opposite the
// first nonzero entry of a0. Columns become Q a_{j+1} (the shift t^i ->
// t^{i-1}), so one coefficient of precision is spent.
inline Arc project_from_center(const Arc& a) {
    int n = a.n();
    if (n < 2) throw Error("BAD_DIMENSION", "projection needs ambient dimension >= 2");
    if (a.precision() < 3) throw PrecisionError(3, "projection");
    if (rank(a.first_columns(3)) != 3)
        throw Error("NOT_SMOOTH", "projected arc would not be smooth (a0 ^ a1 ^ a2 = 0)");
    std::vector<Rational> a0 = a.column(0);
    int pivot = 0;
    while (a0[static_cast<std::size_t>(pivot)] == 0) ++pivot;
    int p = a.precision() - 1;
    std::vector<TruncSeries> out;
    for (int i = 0; i <= n; ++i) {
        if (i == pivot) continue;
        // (a_i - (a_i at pivot coefficient ratio) * a0) shifted down by one.
        TruncSeries corrected =
            a.coord(i) - (a0[static_cast<std::size_t>(i)] / a0[static_cast<std::size_t>(pivot)]) *
                             a.coord(pivot);
        std::vector<Rational> shifted(static_cast<std::size_t>(p));
        for (int k = 0; k < p; ++k) shifted[static_cast<std::size_t>(k)] = corrected[k + 1];
        out.push_back(TruncSeries(std::move(shifted)));
    }
    return Arc(std::move(out));
}

// Image under the second Veronese map, coordinates in the monomial basis
// x_i x_j (i <= j, lexicographic); cross terms carry the factor 2 coming
// from squaring the linear form.
inline Arc veronese2(const Arc& a) {
    int n = a.n();
    std::vector<TruncSeries> out;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            TruncSeries prod = a.coord(i) * a.coord(j);
            out.push_back(i == j ? prod : Rational(2) * prod);
        }
    return Arc(std::move(out));
}

// Tangent scroll a'(t) ^ a(t) in the wedge basis e_i ^ e_j (i < j,
// lexicographic). Loses one coefficient to the derivative.
inline Arc tangent_scroll(const Arc& a) {
    int n = a.n();
    if (a.precision() < 3) throw PrecisionError(3, "tangent scroll");
    std::vector<TruncSeries> d;
    for (int i = 0; i <= n; ++i) d.push_back(derive(a.coord(i)));
    std::vector<TruncSeries> out;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int p = d[static_cast<std::size_t>(i)].precision();
            out.push_back(d[static_cast<std::size_t>(i)] * a.coord(j).truncated(p) -
                          d[static_cast<std::size_t>(j)] * a.coord(i).truncated(p));
        }
    return Arc(std::move(out));
}

// Pluecker-dual arc: coordinate i is det(e_i, a, a^[1], ..., a^[n-1]),
// i.e. (-1)^i times the maximal minor omitting row i. Spends n-1
// coefficients on divided derivatives.
inline Arc dual_arc(const Arc& a) {
    int n = a.n();
    if (a.precision() < n) throw PrecisionError(n, "dual arc");
    int p = a.precision() - (n - 1);
    std::vector<std::vector<TruncSeries>> cols;  // cols[j][i]: j-th divided derivative
    for (int j = 0; j < n; ++j) {
        std::vector<TruncSeries> col;
        for (int i = 0; i <= n; ++i) col.push_back(divided_derive(a.coord(i), j).truncated(p));
        cols.push_back(std::move(col));
    }
    std::vector<TruncSeries> out;
    for (int i = 0; i <= n; ++i) {
        SeriesMat m = series_mat(n, n, p);
        int r = 0;
        for (int row = 0; row <= n; ++row) {
            if (row == i) continue;
            for (int j = 0; j < n; ++j)
                m(r, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)];
            ++r;
        }
        TruncSeries minor = det_series(m);
        out.push_back(i % 2 == 0 ? minor : -minor);
    }
    return Arc(std::move(out));
}

}  // namespace halphen

#endif
