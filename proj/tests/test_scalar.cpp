#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "askey/rational.hpp"
#include "askey/series.hpp"

using namespace askey;

TEST_CASE("rationals stay canonical") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(21, 7).str() == "3");
}

TEST_CASE("parse and serialize round-trip the p/q format") {
    CHECK(Rational::parse("-3/5").str() == "-3/5");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("+3/6").str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("0.5"), ConfigError);
    CHECK_THROWS_AS(Rational::parse("3/"), ConfigError);
    CHECK_THROWS_AS(Rational::parse(""), ConfigError);
    CHECK_THROWS_AS(Rational::parse("1/0"), SingularParameters);
}

TEST_CASE("arithmetic is exact and closed") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), SingularParameters);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("large values do not overflow") {
    Rational big(1);
    for (int k = 0; k < 200; ++k) big *= Rational(10);
    CHECK(big.str().size() == 201);
    CHECK((big / big) == Rational(1));
}

TEST_CASE("pochhammer basics") {
    Rational a(5, 7);
    CHECK(pochhammer(a, 0) == Rational(1));       // empty product
    CHECK(pochhammer(Rational(0), 3) == Rational(0));
    CHECK(pochhammer(Rational(3), 2) == Rational(12));
    CHECK(pochhammer(Rational(-2), 5) == Rational(0)); // crosses zero
}

TEST_CASE("q-pochhammer basics") {
    Rational q(2, 5);
    CHECK(q_pochhammer(Rational(1, 3), q, 0) == Rational(1));
    CHECK(q_pochhammer(Rational(1), q, 4) == Rational(0)); // (1-1) factor
    CHECK(q_pochhammer(Rational(2), Rational(2), 2) == Rational(3)); // (1-2)(1-4)
}

TEST_CASE("q-pochhammer satisfies the one-step product identity") {
    Rational q(3, 5);
    for (int trial = 0; trial < 8; ++trial) {
        Rational a(trial + 2, 7);
        for (int k = 0; k < 20; ++k) {
            Rational lhs = q_pochhammer(a, q, k + 1);
            Rational rhs = q_pochhammer(a, q, k) * (Rational(1) - a * q.pow(k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("terminating 2F1 oracle value") {
    // 2F1(-1, -1; -2 | 2) = 1 + (-1)(-1)/(-2) * 2 = 0
    SeriesSpec s;
    s.top = {Rational(-1), Rational(-1)};
    s.bottom = {Rational(-2)};
    s.argument = Rational(2);
    CHECK(hyp_terminating(s, 1) == Rational(0));
    CHECK(hyp_terminating(s, 0) == Rational(1)); // single term
}

TEST_CASE("top parameter 1 truncates the q-series to 1") {
    SeriesSpec s;
    Rational q(2, 5);
    s.top = {q.pow(-4), Rational(1), Rational(1, 3)};
    s.bottom = {Rational(1, 7), Rational(1, 9)};
    s.argument = q;
    for (int i = 0; i <= 4; ++i) CHECK(q_hyp_terminating(s, q, i) == Rational(1));
}

TEST_CASE("series value is stable under top/bottom permutations") {
    Rational q(3, 5);
    SeriesSpec s;
    s.top = {q.pow(-3), Rational(1, 2), Rational(2, 3)};
    s.bottom = {Rational(1, 5), Rational(3, 7)};
    s.argument = q;
    Rational v = q_hyp_terminating(s, q, 3);
    std::swap(s.top[1], s.top[2]);
    std::swap(s.bottom[0], s.bottom[1]);
    CHECK(q_hyp_terminating(s, q, 3) == v);
}

TEST_CASE("singular bottom raises, invalid base raises") {
    Rational q(2, 5);
    SeriesSpec s;
    s.top = {q.pow(-3), Rational(1, 2)};
    s.bottom = {q.pow(-1)};  // (q^{-1}; q)_k dies at k = 2
    s.argument = q;
    CHECK_THROWS_AS(q_hyp_terminating(s, q, 3), SingularSeries);
    CHECK_THROWS_AS(q_hyp_terminating(s, Rational(1), 3), InvalidBase);
    CHECK_THROWS_AS(q_hyp_terminating(s, Rational(-1), 3), InvalidBase);
    CHECK_THROWS_AS(q_hyp_terminating(s, Rational(0), 3), InvalidBase);
}

TEST_CASE("balance detection") {
    Rational q(2, 5);
    // q-Racah-shaped spec is 1-balanced for any admissible parameters
    Rational al(1, 3), be(1, 5), ga(1, 7);
    int N = 4, i = 2, x = 1;
    SeriesSpec s;
    s.top = {q.pow(-i), al * be * q.pow(i + 1), q.pow(-x), ga * q.pow(x - N)};
    s.bottom = {al * q, be * ga * q, q.pow(-N)};
    s.argument = q;
    auto k = is_k_balanced(s, q, i);
    REQUIRE(k.has_value());
    CHECK(*k == 1);

    s.argument = Rational(1, 2); // z != q gates the check off
    CHECK(!is_k_balanced(s, q, i).has_value());

    s.argument = q;
    s.bottom[1] = Rational(9, 13); // generic bottom: no integer balance
    CHECK(!is_k_balanced(s, q, i).has_value());
}
