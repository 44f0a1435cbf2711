#include <doctest.h>

#include "jackpoly/alpha_fraction.hpp"
#include "test_helpers.hpp"

#include <nlohmann/json.hpp>

using namespace jackpoly;
using jackpoly::testing::frac;
using jackpoly::testing::random_fraction;
using jackpoly::testing::random_nonzero_poly;
using jackpoly::testing::random_poly;

namespace {
const AlphaPolynomial A = AlphaPolynomial::alpha();
}

TEST_CASE("normalize reduces to canonical form") {
    // (α²-1)/(α+1) = α-1
    AlphaFraction f = AlphaFraction::normalized(A * A - AlphaPolynomial(1), A + AlphaPolynomial(1));
    CHECK(f == AlphaFraction(A - AlphaPolynomial(1)));
    CHECK(f.den().is_one());

    CHECK(AlphaFraction::normalized(AlphaPolynomial(), A).is_zero());

    // (2α+2)/4 = (α+1)/2, i.e. numerator (1/2)α + 1/2, denominator 1
    AlphaFraction g = AlphaFraction::normalized(A * Rational(2) + AlphaPolynomial(2),
                                                AlphaPolynomial(4));
    CHECK(g == frac("(α+1)/2"));
    CHECK(g.den().is_one());
    CHECK(g.str() == "(α+1)/2");

    CHECK_THROWS_AS(AlphaFraction::normalized(AlphaPolynomial(1), AlphaPolynomial()),
                    std::domain_error);
}

TEST_CASE("field arithmetic") {
    CHECK(frac("1/α") + frac("1") == frac("(1+α)/α"));
    CHECK(frac("α+1") * frac("α-1") == frac("α^2-1"));
    CHECK(frac("α^2-1") / frac("α+1") == frac("α-1"));
    CHECK_THROWS_AS(frac("1") / AlphaFraction(), std::domain_error);
}

TEST_CASE("canonicity: common factors never change the value") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        AlphaPolynomial a = random_poly(rng, 3);
        AlphaPolynomial b = random_nonzero_poly(rng, 3);
        AlphaPolynomial c = random_nonzero_poly(rng, 3);
        CHECK(AlphaFraction::normalized(a * c, b * c) == AlphaFraction::normalized(a, b));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        AlphaFraction a = random_fraction(rng), b = random_fraction(rng), c = random_fraction(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("rising factorial series coefficients") {
    CHECK(rising_factorial_coefficient(AlphaFraction(1), 3) == AlphaFraction(1));
    CHECK(rising_factorial_coefficient(frac("1/α"), 1) == frac("1/α"));
    CHECK(rising_factorial_coefficient(frac("1/α"), 2) == frac("(1+α)/(2α^2)"));
    CHECK(rising_factorial_coefficient(frac("1/α"), 0) == AlphaFraction(1));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        AlphaFraction c = random_fraction(rng);
        for (int k = 0; k <= 4; ++k) {
            AlphaFraction product(1);
            for (int j = 0; j < k; ++j) product *= c + AlphaFraction(j);
            CHECK(rising_factorial_coefficient(c, k) * AlphaFraction(Rational(factorial(k))) ==
                  product);
        }
    }
}

TEST_CASE("specialization at rational α") {
    CHECK(frac("α+1").evaluate_alpha(Rational(2)) == Rational(3));
    CHECK_THROWS_AS(frac("1/(α+1)").evaluate_alpha(Rational(-1)), std::domain_error);
    // Canonical form cancels before evaluation.
    AlphaFraction f = AlphaFraction::normalized(A * A - AlphaPolynomial(1), A - AlphaPolynomial(1));
    CHECK(f.evaluate_alpha(Rational(1)) == Rational(2));
}

TEST_CASE("rendering and parsing round-trip") {
    CHECK(frac("(α^2+3α)/(α+1)").str() == "(α^2+3α)/(α+1)");
    CHECK(frac("alpha").str() == "α");
    CHECK(frac("-α/2").str() == "-α/2");
    CHECK(AlphaFraction().str() == "0");
    CHECK(frac("1/α").latex() == "\\frac{1}{\\alpha}");
    CHECK(frac("α+2").latex() == "\\alpha+2");

    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        AlphaFraction f = random_fraction(rng, 3);
        CHECK(AlphaFraction::parse(f.str()) == f);
        CHECK(AlphaFraction::from_json(f.to_json()) == f);
    }
    CHECK_THROWS_AS(AlphaFraction::parse("α+"), std::invalid_argument);
    CHECK_THROWS_AS(AlphaFraction::parse("x"), std::invalid_argument);
}

TEST_CASE("rationals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
}
