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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <halphen/group.hpp>
#include <halphen/invariants.hpp>
#include <halphen/sampling.hpp>

using namespace halphen;

namespace {

Arc poly_arc(std::vector<std::vector<long>> rows, int precision) {
    std::vector<TruncSeries> coords;
    for (auto& row : rows) {
        std::vector<Rational> c(static_cast<std::size_t>(precision));
        for (std::size_t k = 0; k < row.size(); ++k) c[k] = Rational(row[k]);
        coords.push_back(TruncSeries(std::move(c)));
    }
    return Arc(std::move(coords));
}

}  // namespace

TEST_CASE("arc construction enforces smoothness and shared precision") {
    CHECK_THROWS_AS(poly_arc({{1, 0}, {2, 0}}, 4), Error);  // a1 = 0
    Arc a = rational_normal_curve(2, 5);
    CHECK(a.n() == 2);
    CHECK(a.precision() == 5);
    CHECK(a.column(1) == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("linear action") {
    Arc a = rational_normal_curve(2, 5);
    CHECK(act(LinearMap::identity(2), a) == a);

    // M_{alpha,beta} at n=1, alpha=2, beta=1 sends (1,t) to (2, 1 + t/2)
    QMat m = qmat_zero(2, 2);
    m(0, 0) = 2; m(0, 1) = 0;
    m(1, 0) = 1; m(1, 1) = make_rational(1, 2);
    Arc b = act(LinearMap(m), rational_normal_curve(1, 4));
    CHECK(b.coord(0) == TruncSeries::constant(Rational(2), 4));
    CHECK(b.coord(1) == TruncSeries::constant(Rational(1), 4) +
                            make_rational(1, 2) * TruncSeries::t(4));

    // permutation reverses the RNC
    QMat p = qmat_zero(3, 3);
    p(0, 2) = 1; p(1, 1) = 1; p(2, 0) = 1;
    Arc c = act(LinearMap(p), a);
    CHECK(c.coord(0) == a.coord(2));
    CHECK(c.coord(2) == a.coord(0));

    QMat sing = qmat_zero(2, 2);
    sing(0, 0) = 1;
    CHECK_THROWS_AS(LinearMap{sing}, Error);
}

TEST_CASE("scaling and reparametrisation actions") {
    Arc a = rational_normal_curve(1, 3);
    CHECK(act(Scaling::identity(3), a) == a);
    Arc doubled = act(Scaling(TruncSeries::constant(Rational(2), 3)), a);
    CHECK(doubled.coord(0) == TruncSeries::constant(Rational(2), 3));
    CHECK(doubled.coord(1) == Rational(2) * TruncSeries::t(3));

    // u = 1 + t on (1, t)
    Arc scaled = act(Scaling(TruncSeries::one(3) + TruncSeries::t(3)), a);
    CHECK(scaled.coord(0) == TruncSeries::one(3) + TruncSeries::t(3));
    CHECK(scaled.coord(1) == TruncSeries::t(3) + TruncSeries::monomial(Rational(1), 2, 3));

    CHECK(act(Reparam::identity(4), rational_normal_curve(2, 4)) == rational_normal_curve(2, 4));
    Arc r = act(Reparam(Rational(2) * TruncSeries::t(4)), rational_normal_curve(2, 4));
    CHECK(r.coord(1) == Rational(2) * TruncSeries::t(4));
    CHECK(r.coord(2) == TruncSeries::monomial(Rational(4), 2, 4));

    // v = t + t^2 on (1, t)
    Arc rp = act(Reparam(TruncSeries::t(3) + TruncSeries::monomial(Rational(1), 2, 3)),
                 rational_normal_curve(1, 3));
    CHECK(rp.coord(0) == TruncSeries::one(3));
    CHECK(rp.coord(1) == TruncSeries::t(3) + TruncSeries::monomial(Rational(1), 2, 3));

    CHECK_THROWS_AS(Scaling(TruncSeries::t(3)), Error);
    CHECK_THROWS_AS(Reparam(TruncSeries::one(3)), Error);
}

TEST_CASE("group actions compose per the semidirect structure") {
    Rng rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 1 + trial % 3;
        Arc a = rng.smooth_arc(n, 9);
        GroupTriple g1 = rng.group_triple(n, 9);
        GroupTriple g2 = rng.group_triple(n, 9);
        CHECK(g2.apply(g1.apply(a)) == compose(g2, g1).apply(a));
    }
}

TEST_CASE("projection from the center") {
    Arc a = project_from_center(rational_normal_curve(2, 5));
    CHECK(a.n() == 1);
    CHECK(a.precision() == 4);
    CHECK(a.coord(0) == TruncSeries::one(4));
    CHECK(a.coord(1) == TruncSeries::t(4));

    CHECK(project_from_center(rational_normal_curve(3, 6)) == rational_normal_curve(2, 5));

    // a2 in span(a0, a1): rejected
    Arc flat = poly_arc({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}, 5);
    CHECK_THROWS_AS(project_from_center(flat), Error);
}

TEST_CASE("veronese image") {
    Arc v = veronese2(rational_normal_curve(1, 4));
    CHECK(v.n() == 2);
    CHECK(v.coord(0) == TruncSeries::one(4));
    CHECK(v.coord(1) == Rational(2) * TruncSeries::t(4));
    CHECK(v.coord(2) == TruncSeries::monomial(Rational(1), 2, 4));

    // b0 column is the symmetric square of a0 in the monomial basis
    Rng rng(3);
    Arc a = rng.smooth_arc(2, 6);
    Arc w = veronese2(a);
    std::vector<Rational> a0 = a.column(0);
    std::vector<Rational> b0 = w.column(0);
    std::size_t idx = 0;
    for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 2; ++j, ++idx) {
            Rational expect = a0[static_cast<std::size_t>(i)] * a0[static_cast<std::size_t>(j)];
            if (i != j) expect *= 2;
            CHECK(b0[idx] == expect);
        }

    // the image of (1, t, t^2) is the degree-4 monomial parametrisation
    Arc conic = veronese2(rational_normal_curve(2, 6));
    CHECK(conic.coord(0) == TruncSeries::one(6));
    CHECK(conic.coord(1) == Rational(2) * TruncSeries::t(6));
    CHECK(conic.coord(3) == TruncSeries::monomial(Rational(1), 2, 6));
    CHECK(conic.coord(5) == TruncSeries::monomial(Rational(1), 4, 6));
}

TEST_CASE("tangent scroll") {
    // n=1: single wedge coordinate a' ^ a, constant for the line
    Arc line = tangent_scroll(rational_normal_curve(1, 4));
    CHECK(line.n() == 0);
    CHECK(line.coord(0) == TruncSeries::constant(Rational(-1), 3));

    Arc s = tangent_scroll(rational_normal_curve(3, 6));
    CHECK(s.n() == 5);
    // c0 = a1 ^ a0 has a single nonzero wedge coordinate (e0 ^ e1)
    std::vector<Rational> c0 = s.column(0);
    CHECK(c0[0] == -1);
    for (std::size_t k = 1; k < c0.size(); ++k) CHECK(c0[k] == 0);

    // scaling the arc by 2 scales every wedge coordinate by 4
    Arc doubled = act(Scaling(TruncSeries::constant(Rational(2), 6)),
                      rational_normal_curve(3, 6));
    Arc s2 = tangent_scroll(doubled);
    for (int i = 0; i <= 5; ++i) CHECK(s2.coord(i) == Rational(4) * s.coord(i));
}

TEST_CASE("dual arc") {
    // n=1: dual of (1,t) swaps coordinates with a sign
    Arc d1 = dual_arc(rational_normal_curve(1, 4));
    CHECK(d1.coord(0) == TruncSeries::t(4));
    CHECK(d1.coord(1) == -TruncSeries::one(4));

    // n=2: dual of (1,t,t^2) is proportional to (t^2, -2t, 1)
    Arc d2 = dual_arc(rational_normal_curve(2, 6));
    Arc expected = poly_arc({{0, 0, 1}, {0, -2}, {1}}, 5);
    CHECK(projectively_equal(d2, expected));

    // biduality: dual of dual is projectively the original
    Rng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + trial % 2;
        Arc a = rng.non_inflexional_arc(n, 10);
        Arc dd = dual_arc(dual_arc(a));
        CHECK(projectively_equal(dd, a.truncated(dd.precision())));
    }

    // covariance: dual(M a) ~ (M^{-1})^T dual(a), projectively
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + trial % 2;
        Arc a = rng.non_inflexional_arc(n, 9);
        LinearMap m = rng.gl_map(n);
        Arc lhs = dual_arc(act(m, a));
        Arc rhs = act(LinearMap(transpose(inverse(m.mat))), dual_arc(a));
        CHECK(projectively_equal(lhs, rhs));
    }
}

TEST_CASE("gap sequences") {
    GapSequence g = gap_sequence(rational_normal_curve(3, 6));
    CHECK(g.indices == std::vector<int>{0, 1, 2, 3});
    CHECK(g.total == 0);

    Arc a = poly_arc({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}}, 5);  // (1, t, t^3)
    GapSequence ga = gap_sequence(a);
    CHECK(ga.indices == std::vector<int>{0, 1, 3});
    CHECK(ga.total == 1);
    CHECK(u_lambda_series(a, Partition{}, 2).valuation() == 1);

    Arc b = poly_arc({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}}, 6);
    CHECK(gap_sequence(b).total == 2);  // (1, t, t^4)

    // not enough columns within precision
    Arc tight = poly_arc({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, 3);
    CHECK_THROWS_AS(gap_sequence(tight), Error);
}

TEST_CASE("prescribed gap sequences from the sampler") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 3;
        std::vector<int> gaps = rng.random_gaps(n, 3);
        Arc a = rng.arc_with_gaps(n, gaps, 14);
        CHECK(gap_sequence(a).gaps == gaps);
    }
}

TEST_CASE("projection commutes with linear maps fixing the center line") {
    Rng rng(31);
    int done = 0;
    while (done < 10) {
        Arc a = rng.non_inflexional_arc(3, 10);
        std::vector<Rational> a0 = a.column(0);
        // M = I + w k^T with k . a0 = 0 fixes a0
        int i0 = 0;
        while (a0[static_cast<std::size_t>(i0)] == 0) ++i0;
        int other = (i0 + 1) % 4;
        std::vector<Rational> k(4);
        k[static_cast<std::size_t>(i0)] = a0[static_cast<std::size_t>(other)];
        k[static_cast<std::size_t>(other)] = -a0[static_cast<std::size_t>(i0)];
        QMat m = qmat_identity(4);
        for (int i = 0; i < 4; ++i) {
            Rational w = rng.rational(2);
            for (int j = 0; j < 4; ++j) m(i, j) += w * k[static_cast<std::size_t>(j)];
        }
        if (det_scalar(m) == 0) continue;
        LinearMap lm{std::move(m)};
        CHECK(act(lm, a).column(0) == a0);
        Arc pa = project_from_center(a);
        Arc pma = project_from_center(act(lm, a));
        CHECK(gap_sequence(pa).gaps == gap_sequence(pma).gaps);
        CHECK((monge_formula(pa) == 0) == (monge_formula(pma) == 0));
        ++done;
    }
}
