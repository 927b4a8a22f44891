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

#include <halphen/matrix.hpp>
#include <halphen/series.hpp>

#include <random>

using namespace halphen;

namespace {

TruncSeries S(std::vector<long> ints) {
    std::vector<Rational> c;
    for (long v : ints) c.push_back(Rational(v));
    return TruncSeries(std::move(c));
}

TruncSeries random_series(std::mt19937_64& eng, int p, int min_val = 0) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
    std::vector<Rational> c(static_cast<std::size_t>(p));
    for (int k = min_val; k < p; ++k) c[static_cast<std::size_t>(k)] = make_rational(num(eng), den(eng));
    return TruncSeries(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and printing are canonical") {
    CHECK(to_string(parse_rational("2/4")) == "1/2");
    CHECK(to_string(parse_rational("1/-2")) == "-1/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
    CHECK(*sixth_root(Rational(64)) == 2);
    CHECK(!sixth_root(Rational(8)).has_value());
    CHECK(!sixth_root(Rational(-64)).has_value());
}

TEST_CASE("addition truncates to the shared precision") {
    CHECK(S({1, 1, 0}) + S({0, 1, 1}) == S({1, 2, 1}));
    TruncSeries f = S({2, 3, 5});
    CHECK(f + TruncSeries::zero(3) == f);
    // (1, P=2) + (t^2, P=4) -> 1 with P=2
    TruncSeries sum = S({1, 0}) + S({0, 0, 1, 0});
    CHECK(sum.precision() == 2);
    CHECK(sum == S({1, 0}));
}

TEST_CASE("multiplication") {
    CHECK(S({1, 1, 0}) * S({1, -1, 0}) == S({1, 0, -1}));
    TruncSeries f = S({3, -2, 7, 1});
    CHECK(f * TruncSeries::one(4) == f);
    CHECK(S({1, 1, 1}) * S({1, 1, 0}) == S({1, 2, 2}));
}

TEST_CASE("composition") {
    TruncSeries f = S({0, 3, 1, 2});
    CHECK(compose(f, TruncSeries::t(4)) == f);
    // (t^2) o (t + t^2) to P=4 keeps t^2 + 2t^3
    TruncSeries inner = S({0, 1, 1, 0});
    CHECK(compose(TruncSeries::monomial(Rational(1), 2, 4), inner) == S({0, 0, 1, 2}));
    // with one more coefficient the t^4 term appears
    TruncSeries inner5 = S({0, 1, 1, 0, 0});
    CHECK(compose(TruncSeries::monomial(Rational(1), 2, 5), inner5) == S({0, 0, 1, 2, 1}));
    CHECK(compose(S({1, 1}), S({0, 2})) == S({1, 2}));
    CHECK_THROWS_AS(compose(f, S({1, 1})), Error);
}

TEST_CASE("reversion") {
    CHECK(revert(TruncSeries::t(5)) == TruncSeries::t(5));
    CHECK(revert(S({0, 1, 1, 0})) == S({0, 1, -1, 2}));
    CHECK(revert(S({0, 2, 0})) == TruncSeries(std::vector<Rational>{
                                       Rational(0), make_rational(1, 2), Rational(0)}));
    CHECK_THROWS_AS(revert(S({1, 1, 0})), Error);
    CHECK_THROWS_AS(revert(S({0, 0, 1})), Error);
}

TEST_CASE("derivatives") {
    CHECK(derive(S({0, 0, 1})) == S({0, 2}));
    CHECK(divided_derive(S({0, 0, 0, 1, 0}), 2) == S({0, 3, 0}));
    TruncSeries f = S({4, 1, -2, 5});
    CHECK(divided_derive(f, 0) == f);
    CHECK_THROWS_AS(divided_derive(S({1, 2}), 2), PrecisionError);
    CHECK_THROWS_AS(derive(S({1})), PrecisionError);
}

TEST_CASE("exponential and antiderivative") {
    CHECK(exp_series(TruncSeries::zero(3)) == S({1, 0, 0}));
    TruncSeries e = exp_series(TruncSeries::t(4));
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == make_rational(1, 2));
    CHECK(e[3] == make_rational(1, 6));
    CHECK(antiderivative(S({1, 1})) ==
          TruncSeries(std::vector<Rational>{Rational(0), Rational(1), make_rational(1, 2)}));
    CHECK(antiderivative(S({1, 1})).precision() == 3);
    CHECK_THROWS_AS(exp_series(S({1, 0})), Error);
}

TEST_CASE("determinants") {
    QMat id = qmat_identity(4);
    CHECK(det_scalar(id) == 1);

    SeriesMat m = series_mat(2, 2, 3);
    m(0, 0) = TruncSeries::t(3);
    m(0, 1) = TruncSeries::one(3);
    m(1, 0) = TruncSeries::zero(3);
    m(1, 1) = TruncSeries::t(3);
    CHECK(det_series(m) == S({0, 0, 1}));

    // the n=2 Monge determinant with sampled rationals
    Rational a2 = make_rational(3, 2), a3 = make_rational(-1, 3), a4 = Rational(5),
             a5 = make_rational(7, 4);
    QMat mm = qmat_zero(3, 3);
    mm(0, 0) = 0;  mm(0, 1) = a2;      mm(0, 2) = 2 * a3;
    mm(1, 0) = a2; mm(1, 1) = a3;      mm(1, 2) = a4;
    mm(2, 0) = a3; mm(2, 1) = a4;      mm(2, 2) = a5;
    CHECK(det_scalar(mm) == -2 * a3 * a3 * a3 + 3 * a2 * a3 * a4 - a2 * a2 * a5);

    // repeated column kills a series determinant
    SeriesMat r = series_mat(3, 3, 4);
    std::mt19937_64 eng(11);
    for (int i = 0; i < 3; ++i) {
        r(i, 0) = random_series(eng, 4);
        r(i, 1) = random_series(eng, 4);
        r(i, 2) = r(i, 0);
    }
    CHECK(det_series(r).is_zero_to_precision());

    // cross-check det_series against det_scalar on constant matrices
    for (int trial = 0; trial < 10; ++trial) {
        QMat q = qmat_zero(4, 4);
        SeriesMat s = series_mat(4, 4, 2);
        std::uniform_int_distribution<long> d(-5, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                q(i, j) = Rational(d(eng));
                s(i, j) = TruncSeries::constant(q(i, j), 2);
            }
        CHECK(det_series(s)[0] == det_scalar(q));
    }
}

TEST_CASE("matrix inverse and rank") {
    std::mt19937_64 eng(5);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 8; ++trial) {
        QMat m = qmat_zero(3, 3);
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = Rational(d(eng));
        } while (det_scalar(m) == 0);
        CHECK(m * inverse(m) == qmat_identity(3));
    }
    QMat r = qmat_zero(2, 3);
    r(0, 0) = 1; r(0, 1) = 2; r(0, 2) = 3;
    r(1, 0) = 2; r(1, 1) = 4; r(1, 2) = 6;
    CHECK(rank(r) == 1);
}

TEST_CASE("ring and composition laws on random samples") {
    std::mt19937_64 eng(42);
    for (int trial = 0; trial < 25; ++trial) {
        TruncSeries f = random_series(eng, 7), g = random_series(eng, 7),
                    h = random_series(eng, 7);
        CHECK(agree_to_shared_precision(f + g, g + f));
        CHECK(agree_to_shared_precision(f * g, g * f));
        CHECK(agree_to_shared_precision((f + g) * h, f * h + g * h));
        CHECK(agree_to_shared_precision((f * g) * h, f * (g * h)));
        CHECK(agree_to_shared_precision(derive(f * g), derive(f) * g + f * derive(g)));

        TruncSeries vg = random_series(eng, 7, 1), vh = random_series(eng, 7, 1);
        if (vg[1] == 0 || vh[1] == 0) continue;
        CHECK(agree_to_shared_precision(compose(compose(f, vg), vh), compose(f, compose(vg, vh))));
        CHECK(agree_to_shared_precision(compose(vg, revert(vg)), TruncSeries::t(7)));
        CHECK(agree_to_shared_precision(compose(revert(vg), vg), TruncSeries::t(7)));
        CHECK(agree_to_shared_precision(exp_series(vg + vh), exp_series(vg) * exp_series(vh)));
        CHECK(agree_to_shared_precision(f * inverse(exp_series(vg)) * exp_series(vg), f));
    }
}

TEST_CASE("zero to precision is not exact zero") {
    TruncSeries z = TruncSeries::zero(4);
    CHECK(z.valuation() == 4);
    CHECK(z.is_zero_to_precision());
    CHECK(z.str() == "0 + O(t^4)");
}
