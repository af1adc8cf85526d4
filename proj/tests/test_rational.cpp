#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwedge/rational.hpp"
#include "test_support.hpp"

using namespace dwedge;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5, 1).str() == "5");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts num/den and integer shorthand") {
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

    // Accumulating thirds never drifts.
    Rational sum(0);
    for (int i = 0; i < 3000; ++i) sum += Rational(1, 3);
    CHECK(sum == Rational(1000));
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(min(Rational(3), Rational(2)) == Rational(2));
    CHECK(max(Rational(3), Rational(2)) == Rational(3));
}

TEST_CASE("round_nearest") {
    CHECK(Rational(7, 2).round_nearest() == 4);  // ties toward +inf
    CHECK(Rational(-7, 2).round_nearest() == -3);
    CHECK(Rational(10, 3).round_nearest() == 3);
    CHECK(Rational(-10, 3).round_nearest() == -3);
    CHECK(Rational(17).round_nearest() == 17);
}

TEST_CASE("results stay canonical under random arithmetic") {
    test::Rng rng(42);
    for (int i = 0; i < 2000; ++i) {
        Rational a = rng.rational(-50, 50, 40);
        Rational b = rng.rational(-50, 50, 40);
        for (Rational v : {a + b, a - b, a * b}) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), v.num().get_mpz_t(), v.den().get_mpz_t());
            CHECK(g == 1);
            CHECK(v.den() > 0);
        }
    }
}
