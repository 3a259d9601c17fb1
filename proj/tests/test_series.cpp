#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qew/series.hpp"
#include "test_util.hpp"

using namespace qew;
using testutil::random_rational;
using testutil::rng;

namespace {

Series from_longs(const std::vector<long>& v) {
    std::vector<BigRational> cs;
    cs.reserve(v.size());
    for (long c : v) cs.emplace_back(c);
    return Series(std::move(cs));
}

}  // namespace

TEST_CASE("series arithmetic") {
    Series u = Series::from_poly(UniPoly::from_ints({1, 1}), 3);
    Series v = Series::from_poly(UniPoly::from_ints({1, -1}), 3);
    CHECK(series_arith(SeriesOp::mul, u, v) == from_longs({1, 0, -1, 0}));
    CHECK(series_arith(SeriesOp::add, u, v) == from_longs({2, 0, 0, 0}));
    CHECK(series_arith(SeriesOp::sub, u, v) == from_longs({0, 2, 0, 0}));
}

TEST_CASE("series division lifts the valuation") {
    Series u = Series::from_poly(UniPoly::from_ints({0, 0, 1, 1}), 3);  // x^2 + x^3
    Series v = Series::from_poly(UniPoly::x(), 3);
    Series q = series_arith(SeriesOp::div, u, v);
    CHECK(q.order() == 2);  // order shrinks by the divisor valuation
    CHECK(q == from_longs({0, 1, 1}));

    CHECK_THROWS_AS(series_arith(SeriesOp::div, u, Series(3)), std::domain_error);
    // dividing something of smaller valuation is a pole
    CHECK_THROWS_AS(series_arith(SeriesOp::div, Series::from_poly(UniPoly::one(), 3), v),
                    std::domain_error);
}

TEST_CASE("mixed truncation orders are rejected") {
    Series u(3), v(4);
    CHECK_THROWS_AS(u + v, std::invalid_argument);
    CHECK_THROWS_AS(u * v, std::invalid_argument);
}

TEST_CASE("series_sqrt of 1-4x^2") {
    Series u = Series::from_poly(UniPoly::from_ints({1, 0, -4}), 8);
    Series s = series_sqrt(u);
    CHECK(s == from_longs({1, 0, -2, 0, -2, 0, -4, 0, -10}));
    CHECK(s * s == u);
}

TEST_CASE("series_sqrt constants") {
    CHECK(series_sqrt(Series::from_poly(UniPoly::one(), 5)) == Series::from_poly(UniPoly::one(), 5));
    Series nine = Series::from_poly(UniPoly::constant(9), 2);
    CHECK(series_sqrt(nine) == Series::from_poly(UniPoly::constant(3), 2));
    CHECK_THROWS_AS(series_sqrt(Series(4)), std::domain_error);
    CHECK_THROWS_AS(series_sqrt(Series::from_poly(UniPoly::constant(2), 4)), std::domain_error);
}

TEST_CASE("series_sqrt squares back on random inputs") {
    for (int i = 0; i < 100; ++i) {
        Series u(10);
        u[0] = BigRational(1);
        for (int k = 1; k <= 10; ++k) u[k] = random_rational(9);
        Series s = series_sqrt(u);
        CHECK(s * s == u);
        CHECK(s[0] == 1);
    }
}

TEST_CASE("series_fixed_point_solve") {
    SUBCASE("motzkin") {
        Series f = series_fixed_point_solve(UniPoly::one(), UniPoly::x(),
                                            UniPoly::monomial(BigRational(1), 2), 12);
        CHECK(f == from_longs({1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511}));
    }
    SUBCASE("dyck") {
        Series f = series_fixed_point_solve(UniPoly::one(), UniPoly(),
                                            UniPoly::monomial(BigRational(1), 2), 10);
        CHECK(f == from_longs({1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42}));
    }
    SUBCASE("no quadratic or linear term") {
        Series f = series_fixed_point_solve(UniPoly::one(), UniPoly(), UniPoly(), 5);
        CHECK(f == Series::from_poly(UniPoly::one(), 5));
    }
    SUBCASE("contraction violated") {
        CHECK_THROWS_WITH_AS(series_fixed_point_solve(UniPoly::one(), UniPoly::one(), UniPoly(), 3),
                             "cannot select branch by iteration", std::domain_error);
    }
}

TEST_CASE("fixed point solution satisfies its equation") {
    std::uniform_int_distribution<int> deg(1, 3);
    for (int i = 0; i < 40; ++i) {
        // random P and random Q, R with valuation >= 1
        UniPoly p = testutil::random_unipoly(2, 4);
        UniPoly q = testutil::random_unipoly(deg(rng()), 4).shifted(1);
        UniPoly r = testutil::random_unipoly(deg(rng()), 4).shifted(1);
        const int order = 12;
        Series f = series_fixed_point_solve(p, q, r, order);
        Series lhs = Series::from_poly(p, order) + Series::from_poly(q, order) * f +
                     Series::from_poly(r, order) * (f * f);
        CHECK(lhs == f);
    }
}

TEST_CASE("closed-form identity: (2x^2 M + (x-1))^2 equals delta") {
    const int order = 12;
    Series m = series_fixed_point_solve(UniPoly::one(), UniPoly::x(),
                                        UniPoly::monomial(BigRational(1), 2), order);
    Series lhs = Series::from_poly(UniPoly::monomial(BigRational(2), 2), order) * m +
                 Series::from_poly(UniPoly::from_ints({-1, 1}), order);
    CHECK(lhs * lhs == Series::from_poly(UniPoly::from_ints({1, -2, -3}), order));
}
