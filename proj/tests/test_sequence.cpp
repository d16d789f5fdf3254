#include <doctest.h>

#include "markov/error.hpp"
#include "markov/sequence.hpp"
#include "oracles.hpp"

using namespace markov;

TEST_SUITE("sequence") {
    TEST_CASE("concat joins end to end") {
        CHECK(concat(Seq{1, 1}, Seq{2, 2}) == Seq{1, 1, 2, 2});
        CHECK(concat(Seq{}, Seq{4, 4}) == Seq{4, 4});
        CHECK(concat(Seq{4, 4}, Seq{11, 11}) == Seq{4, 4, 11, 11});
    }

    TEST_CASE("repeat is k-fold concatenation") {
        CHECK(repeat(Seq{4, 4}, 2) == Seq{4, 4, 4, 4});
        CHECK(repeat(Seq{4, 4}, 0).empty());
        Seq s = concat(repeat(Seq{4, 4}, 5), Seq{11, 11});
        REQUIRE(s.size() == 12);
        for (std::size_t i = 0; i < 10; ++i) CHECK(s[i] == 4);
        CHECK(s[10] == 11);
        CHECK(s[11] == 11);
    }

    TEST_CASE("elements must be positive") {
        CHECK_THROWS_AS(Seq({1, 0, 2}), DomainError);
        CHECK_THROWS_AS(Seq(std::vector<BigInt>{BigInt(-3)}), DomainError);
    }

    TEST_CASE("cf_eval") {
        CHECK(cf_eval(Seq{2, 1, 3}) == Rational(11, 4));
        CHECK(cf_eval(Seq{5, 1, 6}) == Rational(41, 7));
        CHECK(cf_eval(Seq{5, 1, 6}).to_string() == "41/7");
        CHECK(cf_eval(Seq{7}) == Rational(7, 1));
        CHECK_THROWS_WITH_AS((void)cf_eval(Seq{}), doctest::Contains("undefined continued fraction"), DomainError);
    }

    TEST_CASE("rational reduces and normalizes sign") {
        Rational r(82, 14);
        CHECK(r.numerator() == 41);
        CHECK(r.denominator() == 7);
        Rational neg(3, -6);
        CHECK(neg.numerator() == -1);
        CHECK(neg.denominator() == 2);
        CHECK_THROWS_AS(Rational(1, 0), DomainError);
    }

    TEST_CASE("continuant") {
        CHECK(continuant(Seq{1, 1, 2}) == 5);
        CHECK(continuant(Seq{}) == 1);
        CHECK(continuant(Seq{4, 4, 11}) == 191);
    }

    TEST_CASE("integer sine drops the last element") {
        CHECK(integer_sine(Seq{1, 1, 2, 2}) == 5);
        CHECK(integer_sine(Seq{2, 2}) == 2);
        CHECK(integer_sine(Seq{4, 4, 4, 4, 11, 11}) == 3427);
        CHECK(integer_sine(Seq{9}) == 1);
        CHECK_THROWS_AS((void)integer_sine(Seq{}), DomainError);
    }

    TEST_CASE("golden values agree with the rational oracle") {
        // The library and the back-to-front rational evaluation must agree
        // on every worked value above.
        std::vector<std::vector<mpz_class>> seqs = {
            {1, 1, 2, 2}, {2, 2}, {4, 4, 4, 4, 11, 11}, {4, 4, 11, 11}};
        for (const auto& s : seqs) CHECK(integer_sine(Seq(s)) == oracle::sine_via_cf(s));
        CHECK(oracle::cf_backward({2, 1, 3}) == mpq_class(11, 4));
        CHECK(oracle::continuant_euler({4, 4, 11}) == 191);
    }

    TEST_CASE("to_string") {
        CHECK(to_string(Seq{4, 4}) == "(4,4)");
        CHECK(to_string(Seq{}) == "()");
    }

    TEST_CASE("parse_decimal") {
        CHECK(parse_decimal("355318099") == 355318099);
        CHECK(parse_decimal("-12") == -12);
        CHECK_THROWS_AS((void)parse_decimal("12a"), DomainError);
        CHECK_THROWS_AS((void)parse_decimal(""), DomainError);
    }
}
