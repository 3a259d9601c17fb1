#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qew/parser.hpp"
#include "test_util.hpp"

#include <sstream>

using namespace qew;
using testutil::random_bipoly;
using testutil::rng;

TEST_CASE("parse_poly_expr basics") {
    CHECK(parse_poly_expr("x^2*q") == BiPoly::term(BigRational(1), 2, 1));
    CHECK(parse_poly_expr("0").is_zero());
    // (1+x)*(1-q) - 1 + q  ==  x - x*q
    BiPoly expected = BiPoly::x() - BiPoly::term(BigRational(1), 1, 1);
    CHECK(parse_poly_expr("(1+x)*(1-q) - 1 + q") == expected);
}

TEST_CASE("parse_poly_expr grammar details") {
    CHECK(parse_poly_expr("3/2*x") == BiPoly::term(make_rational(3, 2), 1, 0));
    CHECK(parse_poly_expr("-x^2") == BiPoly::term(BigRational(-1), 2, 0));
    CHECK(parse_poly_expr("- - 5") == BiPoly::constant(5));
    CHECK(parse_poly_expr("2^3") == BiPoly::constant(8));
    CHECK(parse_poly_expr("x^0") == BiPoly::one());
    CHECK(parse_poly_expr("(x + q)^2") == parse_poly_expr("x^2 + 2*x*q + q^2"));
    // unary minus binds looser than ^
    CHECK(parse_poly_expr("-x^2 + x^2").is_zero());
}

TEST_CASE("parse_poly_expr errors carry positions") {
    auto check_pos = [](const char* text, size_t pos) {
        try {
            parse_poly_expr(text);
            FAIL_CHECK("no error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.position() == pos);
        }
    };
    check_pos("x^-2", 2);
    check_pos("y + 1", 0);
    check_pos("2x", 1);  // implicit multiplication is not allowed
    check_pos("x^q", 2);
    check_pos("x^(2)", 2);
    check_pos("1/0", 2);
    check_pos("x/2", 1);  // '/' only forms rational literals
    CHECK_THROWS_AS(parse_poly_expr(""), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("(1+x"), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("1+"), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("foo"), ParseError);
}

TEST_CASE("parse_step_set") {
    CHECK(parse_step_set("[[1,1],[1,0],[1,-1]]") == StepSet::motzkin());
    CHECK(parse_step_set("[[1,1],[1,-1]]") == StepSet::dyck());
    CHECK(parse_step_set("[[1,2],[1,-1]]") == StepSet({2, -1}));
    CHECK(parse_step_set("{(1,2),(1,-1)}") == StepSet({-1, 2}));
    CHECK(parse_step_set("[[1,1],[1,1]]") == StepSet({1}));  // duplicates dropped

    CHECK_THROWS_AS(parse_step_set("[[2,1]]"), ParseError);
    CHECK_THROWS_AS(parse_step_set("[]"), ParseError);
    CHECK_THROWS_AS(parse_step_set(""), ParseError);
    CHECK_THROWS_AS(parse_step_set("[[1,1]"), ParseError);
    CHECK_THROWS_AS(parse_step_set("[[1,1]] junk"), ParseError);
    try {
        parse_step_set("[[2,1]]");
        FAIL_CHECK("width-2 step accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("only unit-width steps supported") != std::string::npos);
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    for (int i = 0; i < 300; ++i) {
        BiPoly p = random_bipoly(8, 6, 6, 20);
        BiPoly back = parse_poly_expr(p.str());
        CHECK(back == p);
    }
}

namespace {

// random well-formed expression straight from the grammar
std::string random_expr(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 6);
    std::uniform_int_distribution<int> small(0, 12);
    switch (pick(rng())) {
        case 0: return std::to_string(small(rng()));
        case 1: return "x";
        case 2: return "q";
        case 3: return std::to_string(small(rng())) + "/" + std::to_string(small(rng()) + 1);
        case 4: return "(" + random_expr(depth - 1) + ")^" + std::to_string(small(rng()) % 4);
        case 5: {
            std::uniform_int_distribution<int> op(0, 2);
            const char* ops[] = {" + ", " - ", "*"};
            return random_expr(depth - 1) + ops[op(rng())] + random_expr(depth - 1);
        }
        default: return "-" + random_expr(depth - 1);
    }
}

}  // namespace

TEST_CASE("fuzzed well-formed expressions always parse") {
    for (int i = 0; i < 400; ++i) {
        std::string text = random_expr(4);
        BiPoly p = parse_poly_expr(text);
        for (const auto& [k, c] : p.terms()) {
            CHECK(c != 0);
            CHECK(k.xe >= 0);
            CHECK(k.qe >= 0);
        }
        CHECK(parse_poly_expr(p.str()) == p);
    }
}
