#include <doctest.h>

#include "markov/seq_expr.hpp"

using namespace markov;

TEST_SUITE("seq_expr") {
    TEST_CASE("powers and concatenation") {
        CHECK(parse_seq("(4,4)^2(11,11)") == Seq{4, 4, 4, 4, 11, 11});
        CHECK(parse_seq("1,1") == Seq{1, 1});
        CHECK(parse_seq("(4,4)^0(11,11)") == Seq{11, 11});
        CHECK(parse_seq("(4,4)^5(11,11)").size() == 12);
        CHECK(parse_seq("7") == Seq{7});
    }

    TEST_CASE("whitespace between tokens is ignored") {
        CHECK(parse_seq("  ( 4 , 4 ) ^ 2 ( 11,11 ) ") == Seq{4, 4, 4, 4, 11, 11});
        CHECK(parse_seq("2, 1, 3") == Seq{2, 1, 3});
        CHECK(parse_seq("4 4") == Seq{4, 4});
    }

    TEST_CASE("bare elements take exponents") {
        CHECK(parse_seq("2^3") == Seq{2, 2, 2});
        CHECK(parse_seq("1,2^2,3") == Seq{1, 2, 2, 3});
    }

    TEST_CASE("structure is kept") {
        SeqExpr e = parse_seq_expr("(4,4)^5(11,11)");
        REQUIRE(e.factors.size() == 2);
        CHECK(e.factors[0].exponent == 5);
        CHECK(e.factors[1].exponent == 1);
        CHECK(e.render() == "(4,4)^5(11,11)");
        CHECK(parse_seq_expr("2,1,3").render() == "2,1,3");
        CHECK(parse_seq_expr("(3)^2").render() == "3^2");
    }

    TEST_CASE("errors carry a position") {
        auto position_of = [](const char* text) -> long {
            try {
                (void)parse_seq_expr(text);
            } catch (const ParseError& e) {
                return static_cast<long>(e.position());
            }
            return -1;
        };
        CHECK(position_of("(4,4") == 4);
        CHECK(position_of("(4;4)") == 2);
        CHECK(position_of("(4,0)") == 3);
        CHECK(position_of("x") == 0);
        CHECK(position_of("(4,4)^") == 6);
        CHECK(position_of("") == 0);
        CHECK(position_of("1,") == 2);
        CHECK(position_of("(4,4)^0") == 0);
    }

    TEST_CASE("error messages") {
        CHECK_THROWS_WITH_AS((void)parse_seq_expr("(4,4)^0"), doctest::Contains("empty sequence"), ParseError);
        CHECK_THROWS_WITH_AS((void)parse_seq_expr("0"), doctest::Contains(">= 1"), ParseError);
        CHECK_THROWS_WITH_AS((void)parse_seq_expr("(1,2)^99999999999999999999"), doctest::Contains("exponent too large"),
                             ParseError);
        CHECK_THROWS_WITH_AS((void)parse_seq_expr("(1,2)^999999999"), doctest::Contains("too many"), ParseError);
        CHECK_THROWS_AS((void)parse_seq_expr("(4,4)^(2)"), ParseError);
        CHECK_THROWS_AS((void)parse_seq_expr(",4"), ParseError);
    }

    TEST_CASE("big elements") {
        Seq s = parse_seq("(123456789012345678901234567890,1)");
        CHECK(s[0] == BigInt("123456789012345678901234567890"));
    }
}
