#include <doctest.h>

#include "cliffdkp/error.hpp"
#include "cliffdkp/expr_parser.hpp"

using namespace cliffdkp;

TEST_SUITE("expr_parser") {

TEST_CASE("grammar examples") {
    const auto f = parse_expr("y[1]^2 + 1/2*p[1][1]", 3, 1);
    CHECK(f.size() == 2);
    CHECK(f == FieldPoly::symbol(FieldSymbol::y(MultiIndex({1}, 3))).pow(2) +
                   Rational(1, 2) * FieldPoly::symbol(FieldSymbol::p(1, MultiIndex({1}, 3))));
    CHECK(parse_expr("y[2,1]", 3, 2) == -FieldPoly::symbol(FieldSymbol::y(MultiIndex({1, 2}, 3))));
    CHECK(parse_expr("y[1,1]", 3, 2).is_zero());
    CHECK(parse_expr("y[1,1] + 3", 3, 2) == FieldPoly(3));
    CHECK(parse_expr("(y[1] + y[2])^2", 2, 1) == parse_expr("y[1]^2 + 2*y[1]*y[2] + y[2]^2", 2, 1));
    CHECK(parse_expr("2^3", 1, 0) == FieldPoly(8));
    CHECK(parse_expr("-2^2", 1, 0) == FieldPoly(-4));
}

TEST_CASE("rank-zero shorthand") {
    CHECK(parse_expr("pi[1]", 2, 0) == parse_expr("pi[1][]", 2, 0));
    CHECK(parse_expr("p[2]", 2, 0) == FieldPoly::symbol(FieldSymbol::p(2, MultiIndex())));
    CHECK_THROWS_AS(parse_expr("pi[1]", 2, 1), Error);
}

TEST_CASE("derivative symbols") {
    CHECK(parse_expr("Dy[1][2]", 2, 1) == FieldPoly::symbol(FieldSymbol::Dy(1, MultiIndex({2}, 2))));
    CHECK(parse_expr("Dpi[2][1][1]", 2, 1) == FieldPoly::symbol(FieldSymbol::Dpi(2, 1, MultiIndex({1}, 2))));
    CHECK(parse_expr("Dp[2][1][]", 2, 0) == FieldPoly::symbol(FieldSymbol::Dp(2, 1, MultiIndex())));
}

TEST_CASE("syntax errors carry a byte offset") {
    try {
        parse_expr("y[1] + * 2", 2, 1);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 7);
    }
    try {
        parse_expr("q[1]", 2, 1);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 0);
    }
    CHECK_THROWS_AS(parse_expr("y[1", 2, 1), ParseError);
    CHECK_THROWS_AS(parse_expr("(y[1]", 2, 1), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0", 2, 1), ParseError);
    CHECK_THROWS_AS(parse_expr("", 2, 1), ParseError);
    CHECK_THROWS_AS(parse_expr("y[1] y[2]", 2, 1), ParseError);
}

TEST_CASE("range and rank errors") {
    CHECK_THROWS_AS(parse_expr("y[3]", 2, 1), RangeError);
    CHECK_THROWS_AS(parse_expr("pi[3][1]", 2, 1), RangeError);
    CHECK_THROWS_AS(parse_expr("y[1,2]", 2, 1), RankError);
    CHECK_THROWS_AS(parse_expr("y[]", 2, 1), RankError);
}

TEST_CASE("round trip through the printer") {
    const char* corpus[] = {"y[1]^2 - 1/3*p[2][1]*y[2]", "-(p[1][2] - y[1])^3", "1/2*(pi[1][1]^2 + pi[2][1]^2)",
                            "y[2]*y[1] - 4", "0", "-7/5", "Dy[1][1] + Dpi[2][2][1]*y[2]"};
    for (const char* s : corpus) {
        const auto f = parse_expr(s, 2, 1);
        CHECK(parse_expr(f.str(), 2, 1) == f);
    }
}

}
