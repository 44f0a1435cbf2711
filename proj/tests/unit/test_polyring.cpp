#include <doctest.h>

#include "jackpoly/bi_series.hpp"
#include "test_helpers.hpp"

#include <nlohmann/json.hpp>

using namespace jackpoly;
using jackpoly::testing::frac;
using jackpoly::testing::random_sparse;

namespace {

SparsePoly x(int n, int i) { return SparsePoly::variable(n, i); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
    SparsePoly lhs = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
    SparsePoly expected = SparsePoly::monomial(2, {2, 0}) - SparsePoly::monomial(2, {0, 2});
    CHECK(lhs == expected);

    std::mt19937 rng(3);
    SparsePoly f = random_sparse(rng, 3, 4);
    CHECK((f - f).is_zero());

    SparsePoly g = x(2, 0) + x(2, 1) * frac("1/(α+1)");
    CHECK(g * frac("α+1") == x(2, 0) * frac("α+1") + x(2, 1));

    CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    SparsePoly f = SparsePoly::monomial(2, {2, 1});
    CHECK(f.partial_derivative(0) == SparsePoly::monomial(2, {1, 1}, AlphaFraction(2)));
    CHECK(x(2, 0).partial_derivative(1).is_zero());
    SparsePoly g = x(2, 0) + x(2, 1) * frac("1/(α+1)");
    CHECK(g.partial_derivative(0) == SparsePoly::one(2));
    CHECK_THROWS_AS(f.partial_derivative(2), std::out_of_range);
}

TEST_CASE("evaluation") {
    std::vector<AlphaFraction> ones{AlphaFraction(1), AlphaFraction(1)};
    SparsePoly f = x(2, 1) * frac("α+2");
    CHECK(f.evaluate(ones) == frac("α+2"));
    CHECK(f.eval_ones() == frac("α+2"));
    CHECK(SparsePoly::monomial(2, {1, 1}).evaluate(ones) == AlphaFraction(1));

    std::vector<AlphaFraction> zeros{AlphaFraction(), AlphaFraction()};
    std::mt19937 rng(5);
    SparsePoly g = random_sparse(rng, 2, 3);
    CHECK(g.evaluate(zeros) == g.coefficient({0, 0}));
}

TEST_CASE("kernel factor expansion") {
    TruncatedBiSeries geo = TruncatedBiSeries::binomial_factor(1, 1, AlphaFraction(1), 0, 0, 2);
    CHECK(geo.terms().coefficient({0, 0}) == AlphaFraction(1));
    CHECK(geo.terms().coefficient({1, 1}) == AlphaFraction(1));
    CHECK(geo.terms().coefficient({2, 2}) == AlphaFraction(1));
    CHECK(geo.terms().term_count() == 3);

    TruncatedBiSeries f1 = TruncatedBiSeries::binomial_factor(1, 1, frac("1/α"), 0, 0, 1);
    CHECK(f1.terms().coefficient({1, 1}) == frac("1/α"));

    TruncatedBiSeries f2 = TruncatedBiSeries::binomial_factor(1, 1, frac("1/α"), 0, 0, 2);
    CHECK(f2.terms().coefficient({2, 2}) == frac("(1+α)/(2α^2)"));
}

TEST_CASE("omega kernel") {
    TruncatedBiSeries omega1 = TruncatedBiSeries::omega_kernel(1, 1);
    CHECK(omega1.terms().coefficient({1, 1}) == frac("1+1/α"));

    TruncatedBiSeries omega2 = TruncatedBiSeries::omega_kernel(2, 1);
    SparsePoly q10 = omega2.coefficient_of_y({1, 0});
    CHECK(q10 == x(2, 0) * frac("1+1/α") + x(2, 1) * frac("1/α"));

    CHECK(TruncatedBiSeries::omega_kernel(2, 0).terms() == SparsePoly::one(4));
}

TEST_CASE("symmetric kernel") {
    TruncatedBiSeries k11 = TruncatedBiSeries::symmetric_kernel(1, 1, frac("1/α"), 1);
    CHECK(k11.terms().coefficient({1, 1}) == frac("1/α"));

    TruncatedBiSeries k22 = TruncatedBiSeries::symmetric_kernel(2, 2, frac("1/α"), 1);
    CHECK(k22.coefficient_of_y({1, 0}) == (x(2, 0) + x(2, 1)) * frac("1/α"));

    TruncatedBiSeries k12 = TruncatedBiSeries::symmetric_kernel(1, 2, frac("1/α"), 1);
    CHECK(k12.coefficient_of_y({1, 0}) == x(1, 0) * frac("1/α"));
    CHECK(k12.coefficient_of_y({0, 1}) == x(1, 0) * frac("1/α"));
}

TEST_CASE("coefficient extraction bounds") {
    TruncatedBiSeries omega = TruncatedBiSeries::omega_kernel(2, 1);
    CHECK(omega.coefficient_of_y({0, 0}) == SparsePoly::one(2));
    CHECK_THROWS_AS(omega.coefficient_of_y({2, 0}), std::domain_error);
    CHECK_THROWS_AS(omega.coefficient_of_y({1}), std::invalid_argument);
}

TEST_CASE("swap exchanges the variable sets") {
    TruncatedBiSeries s(2, 2, 2);
    TruncatedBiSeries t = TruncatedBiSeries::binomial_factor(2, 2, frac("α"), 0, 1, 2);
    // x1·y2 terms become x2·y1 terms.
    CHECK(t.swap_xy().terms().coefficient({0, 1, 1, 0}) == frac("α"));
    CHECK_THROWS_AS(TruncatedBiSeries::symmetric_kernel(1, 2, frac("1/α"), 1).swap_xy(),
                    std::logic_error);
}

TEST_CASE("swap involution and kernel symmetry") {
    for (int n = 1; n <= 3; ++n) {
        const int cap = n == 3 ? 3 : 4;
        TruncatedBiSeries omega = TruncatedBiSeries::omega_kernel(n, cap);
        CHECK(omega.swap_xy() == omega);
        CHECK(omega.swap_xy().swap_xy() == omega);
    }
    TruncatedBiSeries omega = TruncatedBiSeries::omega_kernel(3, 4);
    CHECK(omega.swap_xy() == omega);
}

TEST_CASE("bi-homogeneity and truncation consistency") {
    for (int n = 1; n <= 2; ++n) {
        TruncatedBiSeries omega = TruncatedBiSeries::omega_kernel(n, 4);
        for (const auto& [e, c] : omega.terms().terms())
            CHECK(omega.x_degree(e) == omega.y_degree(e));
        for (int d = 0; d <= 4; ++d)
            CHECK(omega.truncated(d) == TruncatedBiSeries::omega_kernel(n, d));

        TruncatedBiSeries sym = TruncatedBiSeries::symmetric_kernel(n, n, frac("1/α"), 3);
        for (const auto& [e, c] : sym.terms().terms())
            CHECK(sym.x_degree(e) == sym.y_degree(e));
    }
}

TEST_CASE("rendering and JSON round-trip") {
    SparsePoly f = x(2, 1) * frac("α+2");
    CHECK(f.str() == "(α+2)·x2");
    CHECK((x(2, 0) + x(2, 1)).latex() == "x_{1}+x_{2}");
    CHECK(SparsePoly(2).str() == "0");
    CHECK(SparsePoly::monomial(2, {2, 1}, frac("-1")).str() == "-x1^2·x2");
    CHECK(SparsePoly::monomial(2, {1, 0}, frac("3")).str() == "3·x1");

    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        SparsePoly g = random_sparse(rng, 3, 4);
        CHECK(SparsePoly::from_json(g.to_json()) == g);
    }
}
