#include <doctest.h>

#include "jackpoly/bi_series.hpp"
#include "jackpoly/composition.hpp"
#include "jackpoly/operators.hpp"
#include "test_helpers.hpp"

using namespace jackpoly;
using jackpoly::testing::frac;
using jackpoly::testing::random_sparse;

namespace {

SparsePoly x(int n, int i) { return SparsePoly::variable(n, i); }

}  // namespace

TEST_CASE("variable transposition") {
    CHECK(transpose_vars(x(2, 0), 0, 1) == x(2, 1));
    SparsePoly sym = SparsePoly::monomial(2, {1, 1});
    CHECK(transpose_vars(sym, 0, 1) == sym);

    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly f = random_sparse(rng, 3, 4);
        CHECK(transpose_vars(transpose_vars(f, 0, 2), 0, 2) == f);
    }
    CHECK_THROWS_AS(transpose_vars(sym, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(transpose_vars(sym, 0, 2), std::out_of_range);
}

TEST_CASE("divided difference") {
    CHECK(divided_difference(x(2, 0), 0, 1) == SparsePoly::one(2));
    CHECK(divided_difference(SparsePoly::monomial(2, {2, 0}), 0, 1) == x(2, 0) + x(2, 1));
    CHECK(divided_difference(SparsePoly::monomial(2, {1, 1}), 0, 1).is_zero());

    // Exactness: N(f)·(x_i - x_j) recovers f - s_ij f.
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        SparsePoly f = random_sparse(rng, 3, 4);
        SparsePoly quotient = divided_difference(f, 0, 1);
        CHECK(quotient * (x(3, 0) - x(3, 1)) == f - transpose_vars(f, 0, 1));
    }

    // N_ij(x_j·f) = x_i·N_ij(f) - f.
    for (int trial = 0; trial < 30; ++trial) {
        SparsePoly f = random_sparse(rng, 2, 4);
        CHECK(divided_difference(f * x(2, 1), 0, 1) ==
              x(2, 0) * divided_difference(f, 0, 1) - f);
    }
}

TEST_CASE("Cherednik operators") {
    // One variable: only the Euler term survives.
    for (int m = 0; m <= 4; ++m) {
        SparsePoly f = SparsePoly::monomial(1, {m});
        CHECK(cherednik(f, 0) == f * (frac("α") * AlphaFraction(m)));
    }

    // ξ_i(1) = -(i-1).
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < n; ++i)
            CHECK(cherednik(SparsePoly::one(n), i) == SparsePoly::one(n) * AlphaFraction(-i));

    CHECK(cherednik(x(2, 1), 1) == x(2, 1) * frac("α"));
    CHECK_THROWS_AS(cherednik(x(2, 1), 2), std::out_of_range);

    // Pairwise commutativity on random polynomials.
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        SparsePoly f = random_sparse(rng, 3, 4, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(cherednik(cherednik(f, i), j) == cherednik(cherednik(f, j), i));
    }
}

TEST_CASE("raising operator") {
    CHECK(phi_raise(SparsePoly::one(2)) == x(2, 1));
    CHECK(phi_raise(x(2, 1)) == SparsePoly::monomial(2, {1, 1}));

    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly f = random_sparse(rng, 3, 3);
        if (f.is_zero()) continue;
        CHECK(phi_raise(f).degree() == f.degree() + 1);
    }

    // Φ sends x^η to x^{Φη}.
    Composition eta{2, 0, 1};
    CHECK(phi_raise(SparsePoly::monomial(3, eta)) == SparsePoly::monomial(3, phi_index(eta)));
}

TEST_CASE("kernel intertwines the x- and y-side operators below the cap") {
    for (int n = 1; n <= 2; ++n) {
        const int cap = 3;
        TruncatedBiSeries omega = TruncatedBiSeries::omega_kernel(n, cap);
        for (int i = 0; i < n; ++i) {
            SparsePoly diff = cherednik_block(omega.terms(), i, 0, n) -
                              cherednik_block(omega.terms(), i, n, n);
            for (const auto& [exps, c] : diff.terms()) {
                int xdeg = 0;
                for (int v = 0; v < n; ++v) xdeg += exps[v];
                CHECK(xdeg >= cap);
            }
        }
    }
}
