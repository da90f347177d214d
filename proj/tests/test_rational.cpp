#include "doctest.h"

#include <stdexcept>

#include "chtg/rational.hpp"

using chtg::exact::Rational;

TEST_CASE("construction canonicalizes sign and gcd") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(-4, -8).to_string() == "1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK(Rational(8, 4).is_integer());
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(3, -6).denominator() == 2);  // denominator kept positive
    CHECK(Rational(3, -6).numerator() == -1);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(7, 5) / Rational(7, 5) == Rational(1));
    CHECK(-Rational(3, 4) == Rational(-3, 4));

    Rational p(123456789, 987654321);
    CHECK(p * (Rational(1) / p) == Rational(1));
    CHECK((p + p) == p * Rational(2));
}

TEST_CASE("comparisons, sign, abs") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) < Rational(0));
    CHECK(Rational(5, 5) >= Rational(1));
    CHECK(Rational(-7, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
    CHECK(Rational(2, 3) != Rational(3, 2));
}

TEST_CASE("string round trip") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational::from_string("-10/4").to_string() == "-5/2");
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("to_double") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
    CHECK(Rational(-22, 7).to_double() == doctest::Approx(-22.0 / 7.0));
}
