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

#include <halphen/invariant_poly.hpp>
#include <halphen/sampling.hpp>

using namespace halphen;

namespace {

// chart arc (1, t, f) with f = sum a_i t^i given from index 2
Arc chart_arc_n2(std::vector<Rational> tail, int precision) {
    std::vector<Rational> f(static_cast<std::size_t>(precision));
    for (std::size_t k = 0; k < tail.size(); ++k) f[k + 2] = tail[k];
    return Arc({TruncSeries::one(precision), TruncSeries::t(precision), TruncSeries(std::move(f))});
}

// the n=3 family (1, t, t^2 + sum alpha_i t^i, t^3 + sum beta_i t^i)
Arc family_n3(Rational a4, Rational a5, Rational a6, Rational b4, Rational b5, Rational b6,
              int precision = 12) {
    std::vector<Rational> x2(static_cast<std::size_t>(precision)),
        x3(static_cast<std::size_t>(precision));
    x2[2] = 1; x2[4] = a4; x2[5] = a5; x2[6] = a6;
    x3[3] = 1; x3[4] = b4; x3[5] = b5; x3[6] = b6;
    return Arc({TruncSeries::one(precision), TruncSeries::t(precision), TruncSeries(std::move(x2)),
                TruncSeries(std::move(x3))});
}

}  // namespace

TEST_CASE("u_lambda on the rational normal curve") {
    Arc a = rational_normal_curve(3, 8);
    CHECK(u_lambda(a, Partition{}) == 1);
    CHECK(wronskian(a) == 1);
    CHECK(!is_inflexional(a));
    CHECK(u_lambda(a, Partition{1}) == 0);
    CHECK_THROWS_AS(u_lambda(a, Partition{1, 1, 1, 1, 1}), Error);   // too many parts
    CHECK_THROWS_AS(u_lambda(a, Partition{9}), PrecisionError);
}

TEST_CASE("u_lambda on the n=2 chart (1, t, sum a_i t^i)") {
    Rational a2 = make_rational(3, 2), a3 = Rational(-2), a4 = make_rational(1, 3),
             a5 = Rational(4), a6 = Rational(-1);
    Arc a = chart_arc_n2({a2, a3, a4, a5, a6}, 9);
    CHECK(u_lambda(a, Partition{}) == a2);
    CHECK(u_lambda(a, Partition{1}) == a3);
    CHECK(u_lambda(a, Partition{2}) == a4);
    CHECK(u_lambda(a, Partition{3}) == a5);
    CHECK(u_lambda(a, Partition{1, 1}) == 0);
    CHECK(u_lambda(a, Partition{2, 1}) == 0);
    CHECK(u_lambda(a, Partition{1, 1, 1}) == 0);
    CHECK(monge_formula(a) == a2 * a2 * a5 - 3 * a2 * a3 * a4 + 2 * a3 * a3 * a3);
}

TEST_CASE("u_lambda table of the n=3 family") {
    Rational a4 = make_rational(1, 2), a5 = Rational(3), a6 = make_rational(-2, 5);
    Rational b4 = Rational(2), b5 = make_rational(5, 3), b6 = Rational(-1);
    Arc a = family_n3(a4, a5, a6, b4, b5, b6);
    CHECK(u_lambda(a, Partition{}) == 1);
    CHECK(u_lambda(a, Partition{1}) == b4);
    CHECK(u_lambda(a, Partition{2}) == b5);
    CHECK(u_lambda(a, Partition{1, 1}) == -a4);
    CHECK(u_lambda(a, Partition{3}) == b6);
    CHECK(u_lambda(a, Partition{2, 1}) == -a5);
    CHECK(u_lambda(a, Partition{1, 1, 1}) == 0);
}

TEST_CASE("u_lambda series and inflexion") {
    // (1, t, t^3): wronskian series has valuation 1, value 3t + O(t^2)
    std::vector<Rational> f(6);
    f[3] = 1;
    Arc a({TruncSeries::one(6), TruncSeries::t(6), TruncSeries(f)});
    TruncSeries u = u_lambda_series(a, Partition{}, 3);
    CHECK(u.valuation() == 1);
    CHECK(u[1] == 3);
    CHECK(is_inflexional(a));
    CHECK(gap_sequence(a).total == 1);

    Arc rnc = rational_normal_curve(2, 7);
    TruncSeries w = u_lambda_series(rnc, Partition{}, 4);
    CHECK(w.valuation() == 0);

    // constant term of the series equals the scalar value
    Rng rng(12);
    for (int k = 0; k < 6; ++k) {
        Arc b = rng.non_inflexional_arc(2, 10);
        for (const Partition& lambda : {Partition{}, Partition{1}, Partition{2, 1}})
            CHECK(u_lambda_series(b, lambda, 2)[0] == u_lambda(b, lambda));
    }
}

TEST_CASE("monge values on slice shapes") {
    // (1, t, t^2) padded: on a conic
    Arc conic = chart_arc_n2({Rational(1)}, 8);
    CHECK(monge_formula(conic) == 0);
    CHECK(monge_veronese(conic) == 0);

    // slice arc (1, t, t^2 + t^5): monge 1
    Arc slice = chart_arc_n2({Rational(1), Rational(0), Rational(0), Rational(1)}, 10);
    CHECK(monge_formula(slice) == 1);
    CHECK(monge_veronese(slice) == monge_veronese_factor());

    // rational normal curve in P3: scroll value 0
    CHECK(monge_scroll(rational_normal_curve(3, 9)) == 0);
}

TEST_CASE("geometric constructions are proportional to the closed formula") {
    Rng rng(2024);
    int nonzero = 0;
    for (int k = 0; k < 12; ++k) {
        Arc a2 = rng.non_inflexional_arc(2, 12);
        CHECK(monge_veronese(a2) == monge_veronese_factor() * monge_formula(a2));
        Arc a3 = rng.non_inflexional_arc(3, 12);
        CHECK(monge_scroll(a3) == monge_scroll_factor() * monge_formula(a3));
        if (monge_formula(a2) != 0) ++nonzero;
    }
    CHECK(nonzero > 0);
}

TEST_CASE("classical n=3 family: scroll determinant value") {
    Rng rng(7);
    for (int k = 0; k < 8; ++k) {
        Rational a4 = rng.rational(), a5 = rng.rational(), a6 = rng.rational();
        Rational b4 = rng.rational(), b5 = rng.rational(), b6 = rng.rational();
        Arc a = family_n3(a4, a5, a6, b4, b5, b6);
        Rational bracket12 =
            12 * (-2 * b4 * b4 * b4 + 3 * b4 * b5 - 3 * a4 * b4 + 2 * a5 - b6);
        // monge_formula reproduces the bracketed polynomial up to global sign
        CHECK(monge_formula(a) == -bracket12 / 12);
        CHECK(monge_scroll(a) == monge_scroll_factor() * monge_formula(a));
    }
}

TEST_CASE("u_lambda covariance under the linear group") {
    Rng rng(5);
    for (int k = 0; k < 10; ++k) {
        int n = 2 + k % 2;
        Arc a = rng.smooth_arc(n, 9);
        LinearMap m = rng.gl_map(n);
        for (const Partition& lambda : {Partition{}, Partition{1}, Partition{2, 1}})
            CHECK(u_lambda(act(m, a), lambda) == m.det * u_lambda(a, lambda));
    }
}

TEST_CASE("torus reparametrisation scales u_lambda by c^{C(n+1,2)+|lambda|}") {
    Rng rng(6);
    for (int k = 0; k < 10; ++k) {
        int n = 2 + k % 2;
        Arc a = rng.smooth_arc(n, 9);
        Rational c = rng.nonzero_rational();
        Arc b = act(Reparam(c * TruncSeries::t(9)), a);
        for (const Partition& lambda : {Partition{}, Partition{1}, Partition{1, 1}})
            CHECK(u_lambda(b, lambda) ==
                  pow_rational(c, weight_shift(n) + lambda.weight()) * u_lambda(a, lambda));
    }
}

TEST_CASE("monge covariance under the full group") {
    Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        int n = 2 + k % 2;
        Arc a = rng.non_inflexional_arc(n, n + 8);
        InvariantPoly monge = InvariantPoly::monge(n);
        CHECK(monge.eval(a) == monge_formula(a));
        auto [l1, r1] = transformation_check(monge, a, GroupElement(rng.sl_map(n)));
        CHECK(l1 == r1);
        auto [l2, r2] = transformation_check(monge, a, GroupElement(rng.unit_scaling(n + 8)));
        CHECK(l2 == r2);
        auto [l3, r3] = transformation_check(monge, a, GroupElement(rng.reparam(n + 8)));
        CHECK(l3 == r3);
    }
    // explicit factors: scaling u0 = 2 on U at n = 2 gives 2^3
    Arc a = rational_normal_curve(2, 8);
    InvariantPoly u_poly = InvariantPoly::coordinate(2, Partition{});
    auto [lu, ru] = transformation_check(
        u_poly, a, GroupElement(Scaling(TruncSeries::constant(Rational(2), 8))));
    CHECK(lu == ru);
    CHECK(u_poly.character(GroupElement(Scaling(TruncSeries::constant(Rational(2), 8)))) == 8);
    // reparam v = 2t on the Monge at n = 2 gives 2^12
    InvariantPoly monge2 = InvariantPoly::monge(2);
    CHECK(monge2.character(GroupElement(Reparam(Rational(2) * TruncSeries::t(8)))) == 4096);
}

TEST_CASE("invariant polynomial arithmetic and bidegrees") {
    InvariantPoly monge = InvariantPoly::monge(2);
    CHECK(monge.reduced_degree() == 3);
    CHECK(monge.reduced_weight() == 3);
    CHECK(monge.bidegree().degree == 9);
    CHECK(monge.bidegree().weight == 12);

    InvariantPoly u = InvariantPoly::coordinate(2, Partition{});
    InvariantPoly u1 = InvariantPoly::coordinate(2, Partition{1});
    CHECK_THROWS_AS(u + u1, Error);  // mixed reduced weights
    CHECK((u * u1).reduced_degree() == 2);
    CHECK((u1.pow(3)).reduced_weight() == 3);

    // evaluation matches direct wronskian
    Rng rng(3);
    Arc a = rng.non_inflexional_arc(2, 9);
    CHECK(u.eval(a) == wronskian(a));
}

TEST_CASE("iota reinterprets the same polynomial one dimension up") {
    InvariantPoly monge2 = InvariantPoly::monge(2);
    InvariantPoly lifted = monge2.iota();
    CHECK(lifted.n() == 3);
    CHECK(lifted.terms() == InvariantPoly::monge(3).terms());
    CHECK(lifted.reduced_degree() == 3);
    CHECK(lifted.reduced_weight() == 3);
    CHECK(lifted.iota().n() == 4);

    InvariantPoly u = InvariantPoly::coordinate(2, Partition{});
    CHECK(u.iota().terms() == InvariantPoly::coordinate(3, Partition{}).terms());

    // vanishing correspondence under projection, on and off the hypersurface
    Rng rng(10);
    for (int k = 0; k < 8; ++k) {
        bool member = k % 2 == 0;
        Arc a = rng.monge_arc(3, 11, member);
        CHECK((monge_formula(a) == 0) == member);
        CHECK((monge_formula(project_from_center(a)) == 0) == member);
    }
}

TEST_CASE("hook coordinates require non-inflexional arcs") {
    std::vector<Rational> f(7);
    f[3] = 1;
    Arc a({TruncSeries::one(7), TruncSeries::t(7), TruncSeries(f)});
    CHECK_THROWS_AS(u_hook(a, 1, 1), Error);
    Arc b = rational_normal_curve(2, 8);
    CHECK(u_hook(b, 1, 1) == 0);
}
