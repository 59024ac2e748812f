#include "doctest.h"

#include <random>

#include "planebound/rational.hpp"

using planebound::Integer;
using planebound::Rational;

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).numerator() == 3);
    CHECK(Rational(6, 4).denominator() == 2);
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(-10, -5) == Rational(2));
}

TEST_CASE("arithmetic identities") {
    const Rational a(155, 4), b(3, 8);
    CHECK(a + b == Rational(313, 8));
    CHECK(a - a == Rational(0));
    CHECK(a * b == Rational(465, 32));
    CHECK(a / a == Rational(1));
    CHECK(-a == Rational(-155, 4));
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("errors: zero denominator and division by zero") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(3) / Rational(0), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rational(155, 4).to_string() == "155/4");
    CHECK(Rational(-7).to_string() == "-7");
    CHECK(Rational::from_string("155/4") == Rational(155, 4));
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK_THROWS_AS(Rational::from_string("x/3"), std::invalid_argument);
}

TEST_CASE("normalized form reconstructs random inputs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const long p = num(rng);
        const long q = den(rng);
        const Rational r(p, q);
        CHECK(r == Rational::from_string(r.to_string()));
        CHECK(Rational(r.numerator(), r.denominator()) == r);
        CHECK(gcd(r.numerator(), r.denominator()) == 1);
        CHECK(r.denominator() > 0);
    }
}

TEST_CASE("predicates") {
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(0).is_nonnegative());
    CHECK_FALSE(Rational(-1, 5).is_nonnegative());
    CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
}
