#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qew/parser.hpp"
#include "qew/stats.hpp"

using namespace qew;

namespace {

DerivationResult motzkin_result(int K) {
    return derk(parse_poly_expr("1"), parse_poly_expr("x"), parse_poly_expr("x^2*q"), K);
}

DerivationResult dyck_result(int K) {
    return derk(parse_poly_expr("1"), BiPoly(), parse_poly_expr("x^2*q"), K);
}

void check_series_prefix(const Series& s, const std::vector<long>& expected) {
    REQUIRE(s.order() + 1 >= static_cast<int>(expected.size()));
    for (size_t i = 0; i < expected.size(); ++i) CHECK(s[static_cast<int>(i)] == expected[i]);
}

}  // namespace

TEST_CASE("StirlingTable recurrence and Bell row sums") {
    StirlingTable table(6);
    CHECK(table.s(1, 1) == 1);
    CHECK(table.s(4, 2) == 7);
    CHECK(table.s(5, 3) == 25);
    for (unsigned p = 2; p <= 6; ++p) {
        CHECK(table.s(p, 1) == 1);
        CHECK(table.s(p, p) == 1);
        for (unsigned j = 2; j < p; ++j)
            CHECK(table.s(p, j) == BigInt(j) * table.s(p - 1, j) + table.s(p - 1, j - 1));
    }
    std::vector<long> bell{1, 2, 5, 15, 52};
    for (unsigned p = 1; p <= 5; ++p) {
        BigInt sum = 0;
        for (unsigned j = 1; j <= p; ++j) sum += table.s(p, j);
        CHECK(sum == bell[p - 1]);
    }
}

TEST_CASE("power_sum_coefficients") {
    CHECK(power_sum_coefficients(1) == std::vector<BigInt>{BigInt(1)});
    CHECK(power_sum_coefficients(2) == std::vector<BigInt>{BigInt(1), BigInt(1)});
    CHECK(power_sum_coefficients(3) == std::vector<BigInt>{BigInt(1), BigInt(3), BigInt(1)});
    CHECK_THROWS_AS(power_sum_coefficients(0), std::invalid_argument);
}

TEST_CASE("moment_series reference values") {
    SUBCASE("motzkin squares") {
        Series s = moment_series(motzkin_result(2), 2, 10);
        check_series_prefix(s, {0, 0, 1, 6, 40, 198, 910, 3848, 15492, 59920, 224917});
    }
    SUBCASE("motzkin total area") {
        Series s = moment_series(motzkin_result(1), 1, 12);
        check_series_prefix(s, {0, 0, 1, 4, 16, 56, 190, 624, 2014, 6412, 20219, 63284, 196938});
    }
    SUBCASE("dyck cubes") {
        Series s = moment_series(dyck_result(3), 3, 16);
        check_series_prefix(s, {0, 0, 1, 0, 72, 0, 1349, 0, 15544, 0, 138898, 0, 1061296, 0,
                                7293133, 0, 46424136});
    }
    SUBCASE("insufficient derivative order names the requirement") {
        DerivationResult r = motzkin_result(1);
        CHECK_THROWS_WITH_AS(moment_series(r, 2, 8),
                             "result holds derivatives up to order 1; power 2 requires order 2",
                             std::invalid_argument);
    }
}

TEST_CASE("power sums from the DP agree with brute force and closed forms") {
    struct Family {
        StepSet steps;
        DerivationResult result;
    };
    Family families[] = {{StepSet::motzkin(), motzkin_result(3)}, {StepSet::dyck(), dyck_result(3)}};
    for (const auto& fam : families) {
        for (unsigned p = 1; p <= 3; ++p) {
            auto dp_route = power_sum_sequence(fam.steps, p, 12);
            Series closed = moment_series(fam.result, p, 12);
            for (int n = 0; n <= 12; ++n) {
                auto brute = brute_force_area_multiset(fam.steps, n);
                BigInt direct = 0;
                for (const auto& [area, count] : brute) {
                    BigInt apow = 1;
                    for (unsigned t = 0; t < p; ++t) apow *= area;
                    direct += count * apow;
                }
                CHECK(dp_route[n] == BigRational(direct));
                CHECK(closed[n] == BigRational(direct));
            }
        }
    }
}

TEST_CASE("stats_sequences") {
    SUBCASE("motzkin row 4") {
        auto rows = stats_sequences(StepSet::motzkin(), 4);
        REQUIRE(rows.size() == 5);
        const StatsRow& row = rows[4];
        CHECK(row.a0 == 9);
        CHECK(row.a1 == 16);
        CHECK(row.a2 == 40);
        CHECK(row.defined);
        CHECK(row.mean == make_rational(16, 9));
        CHECK(row.variance == make_rational(104, 81));
    }
    SUBCASE("odd dyck rows are undefined") {
        auto rows = stats_sequences(StepSet::dyck(), 3);
        CHECK_FALSE(rows[3].defined);
        CHECK(rows[3].a0 == 0);
    }
    SUBCASE("the empty walk row") {
        auto rows = stats_sequences(StepSet::motzkin(), 1);
        CHECK(rows[0].a0 == 1);
        CHECK(rows[0].a1 == 0);
        CHECK(rows[0].a2 == 0);
        CHECK(rows[0].defined);
        CHECK(rows[0].mean == 0);
        CHECK(rows[0].variance == 0);
    }
    SUBCASE("variance is nonnegative wherever defined") {
        for (const auto& steps : {StepSet::dyck(), StepSet::motzkin(), StepSet({2, -1})}) {
            auto rows = stats_sequences(steps, 100);
            for (const auto& row : rows)
                if (row.defined) CHECK(sgn(row.variance) >= 0);
        }
    }
    SUBCASE("cross-checked against brute force") {
        auto rows = stats_sequences(StepSet::motzkin(), 8);
        for (int n = 0; n <= 8; ++n) {
            auto brute = brute_force_area_multiset(StepSet::motzkin(), n);
            BigInt a0 = 0, a1 = 0, a2 = 0;
            for (const auto& [area, count] : brute) {
                a0 += count;
                a1 += count * area;
                a2 += count * area * area;
            }
            CHECK(rows[n].a0 == a0);
            CHECK(rows[n].a1 == BigRational(a1));
            CHECK(rows[n].a2 == BigRational(a2));
        }
    }
}

TEST_CASE("growth_estimate") {
    SUBCASE("constant sequences have ratio exactly 1") {
        std::vector<BigRational> fives(12, BigRational(5));
        CHECK(growth_estimate(fives) == 1.0);
    }
    SUBCASE("motzkin growth approaches 3") {
        auto derivs = q_derivatives_at_one(StepSet::motzkin(), 200, 0);
        std::vector<BigRational> counts;
        for (const auto& d : derivs) counts.emplace_back(d[0]);
        double est = growth_estimate(counts);
        CHECK(std::abs(est - 3.0) < 1e-3);
    }
    SUBCASE("catalan growth approaches 4") {
        auto derivs = q_derivatives_at_one(StepSet::dyck(), 200, 0);
        std::vector<BigRational> counts;
        for (size_t n = 0; n < derivs.size(); n += 2) counts.emplace_back(derivs[n][0]);
        double est = growth_estimate(counts);
        CHECK(std::abs(est - 4.0) < 1e-3);
    }
    SUBCASE("input validation") {
        std::vector<BigRational> few(5, BigRational(1));
        CHECK_THROWS_AS(growth_estimate(few), std::invalid_argument);
        std::vector<BigRational> with_zero(12, BigRational(1));
        with_zero[4] = 0;
        CHECK_THROWS_AS(growth_estimate(with_zero), std::invalid_argument);
    }
}
