#include <doctest.h>

#include "jackpoly/jack.hpp"
#include "jackpoly/pairing.hpp"
#include "jackpoly/verify.hpp"
#include "test_helpers.hpp"

using namespace jackpoly;
using jackpoly::testing::frac;
using jackpoly::testing::random_fraction;
using jackpoly::testing::random_sparse;

namespace {

SparsePoly x(int n, int i) { return SparsePoly::variable(n, i); }

}  // namespace

TEST_CASE("q-basis from the kernel") {
    DualBasis basis = DualBasis::nonsymmetric(2, 2);
    CHECK(basis.dual_polynomial({0, 0}) == SparsePoly::one(2));
    CHECK(basis.dual_polynomial({1, 0}) == x(2, 0) * frac("1+1/α") + x(2, 1) * frac("1/α"));
    CHECK(basis.dual_polynomial({0, 1}) == x(2, 0) * frac("1/α") + x(2, 1) * frac("1+1/α"));
    for (const auto& gamma : basis.index(2)) {
        CHECK(basis.dual_polynomial(gamma).is_homogeneous());
        CHECK(basis.dual_polynomial(gamma).degree() == 2);
    }
}

TEST_CASE("nonsymmetric pairing values") {
    DualBasis basis = DualBasis::nonsymmetric(2, 2);
    CHECK(pair_polynomials(SparsePoly::one(2), SparsePoly::one(2), basis) == AlphaFraction(1));
    CHECK(pair_polynomials(x(2, 1), x(2, 1), basis) == frac("(α+1)/(α+2)"));

    JackTable table(2);
    CHECK(pair_polynomials(table.integral({1, 0}), table.integral({0, 1}), basis).is_zero());

    CHECK_THROWS_AS(pair_polynomials(SparsePoly::monomial(2, {3, 0}), x(2, 0), basis),
                    std::domain_error);
}

TEST_CASE("duality of the constructed bases") {
    DualBasis basis = DualBasis::nonsymmetric(2, 3);
    for (int d = 0; d <= 3; ++d) {
        for (const auto& eta : basis.index(d)) {
            for (const auto& gamma : basis.index(d)) {
                AlphaFraction value = pair_polynomials(SparsePoly::monomial(2, eta),
                                                       basis.dual_polynomial(gamma), basis);
                CHECK(value == AlphaFraction(eta == gamma ? 1 : 0));
            }
        }
    }
}

TEST_CASE("pairing is bilinear, symmetric, and degree-orthogonal") {
    DualBasis basis = DualBasis::nonsymmetric(2, 4);
    std::mt19937 rng(37);
    for (int trial = 0; trial < 12; ++trial) {
        SparsePoly f = random_sparse(rng, 2, 2);
        SparsePoly g = random_sparse(rng, 2, 2);
        SparsePoly h = random_sparse(rng, 2, 2);
        AlphaFraction c = random_fraction(rng, 1);
        CHECK(pair_polynomials(f, g, basis) == pair_polynomials(g, f, basis));
        CHECK(pair_polynomials(f + h, g, basis) ==
              pair_polynomials(f, g, basis) + pair_polynomials(h, g, basis));
        CHECK(pair_polynomials(f * c, g, basis) == c * pair_polynomials(f, g, basis));
    }
    // Homogeneous components of different degrees pair to zero.
    for (int da = 0; da <= 2; ++da) {
        for (int db = 0; db <= 2; ++db) {
            if (da == db) continue;
            SparsePoly f = SparsePoly::monomial(2, {da, 0});
            SparsePoly g = SparsePoly::monomial(2, {0, db});
            CHECK(pair_polynomials(f, g, basis).is_zero());
        }
    }
}

TEST_CASE("per-degree q-matrices invert across the sweep") {
    for (int n = 1; n <= 3; ++n) {
        const int cap = n == 3 ? 5 : 5;
        DualBasis basis = DualBasis::nonsymmetric(n, cap);  // throws if any block is singular
        CHECK(basis.cap() == cap);
    }
}

TEST_CASE("g-basis and the symmetric pairing") {
    DualBasis basis = DualBasis::symmetric(2, 2);
    CHECK(basis.dual_polynomial({0, 0}) == SparsePoly::one(2));
    CHECK(basis.dual_polynomial({1, 0}) == monomial_symmetric({1, 0}) * frac("1/α"));
    for (int d = 0; d <= 2; ++d)
        for (const auto& lambda : basis.index(d))
            CHECK(basis.dual_polynomial(lambda).is_symmetric());

    SparsePoly m1 = monomial_symmetric({1, 0});
    CHECK(pair_symmetric(m1, m1, basis) == frac("α"));

    JackTable table(2);
    CHECK(pair_symmetric(table.symmetric_integral({1, 0}),
                         table.symmetric_integral({1, 0}), basis) == frac("α"));
    CHECK(pair_symmetric(table.symmetric_integral({2, 0}),
                         table.symmetric_integral({1, 1}),
                         DualBasis::symmetric(2, 2))
              .is_zero());

    CHECK_THROWS_AS(pair_symmetric(x(2, 0), m1, basis), std::invalid_argument);

    // <m_λ, g_μ>_s = δ.
    DualBasis basis3 = DualBasis::symmetric(3, 3);
    for (int d = 0; d <= 3; ++d)
        for (const auto& lambda : basis3.index(d))
            for (const auto& mu : basis3.index(d))
                CHECK(pair_symmetric(monomial_symmetric(lambda), basis3.dual_polynomial(mu),
                                     basis3) == AlphaFraction(lambda == mu ? 1 : 0));
}

TEST_CASE("norm rewrite recursion") {
    // r_η = d_η²/f_η obeys r_{s_iη} = (d²-1)/d²·r_η when η_i > η_{i+1}.
    for (int n = 2; n <= 3; ++n) {
        for (int deg = 0; deg <= 4; ++deg) {
            for (const auto& eta : enumerate_compositions(n, deg)) {
                CompositionConstants cc = composition_constants(eta);
                AlphaFraction r_eta = cc.d * cc.d / cc.f;
                std::vector<AlphaFraction> ebar = eigenvalue_vector(eta);
                for (int i = 0; i + 1 < n; ++i) {
                    if (eta[i] <= eta[i + 1]) continue;
                    Composition swapped = eta;
                    std::swap(swapped[i], swapped[i + 1]);
                    CompositionConstants sc = composition_constants(swapped);
                    AlphaFraction r_swapped = sc.d * sc.d / sc.f;
                    AlphaFraction d = ebar[i] - ebar[i + 1];
                    AlphaFraction dd = d * d;
                    CHECK(r_swapped == r_eta * ((dd - AlphaFraction(1)) / dd));
                }
            }
        }
    }
}

TEST_CASE("verification suites pass on small sweeps") {
    CHECK(verify_orthogonality(1, 3).all_passed());
    CHECK(verify_orthogonality(2, 3).all_passed());
    CHECK(verify_cauchy(1, 2).all_passed());
    CHECK(verify_cauchy(2, 2).all_passed());
    CHECK(verify_symmetrization(2, 3).all_passed());
    CHECK(verify_evaluation(2, 3).all_passed());
    CHECK(verify_recursions(3, 3).all_passed());
    CHECK(verify_las(2, 2, AlphaFraction(1)).all_passed());
    CHECK(verify_las(2, 2, frac("2/α")).all_passed());
    CHECK(verify_kernel_intertwining(2, 3).all_passed());
    CHECK(verify_oracle(2, 3).all_passed());
    CHECK(verify_eigen(2, 3).all_passed());
    CHECK(verify_stanley(2, 3).all_passed());
    CHECK(verify_stability(2, 2).all_passed());
}

TEST_CASE("orthogonality sweep is thread-count independent") {
    Report serial = verify_orthogonality(2, 3, 1);
    Report parallel = verify_orthogonality(2, 3, 4);
    CHECK(serial.to_json() == parallel.to_json());
    // sanity on the check counts: 4 diagonal + 6 off-diagonal at n=1, D=3
    Report tiny = verify_orthogonality(1, 3);
    CHECK(tiny.entries().size() == 10);
    CHECK(tiny.all_passed());
}

TEST_CASE("reports carry failures verbatim") {
    Report r("demo", {});
    r.add_result("identity", {{"case", 1}}, false, "α", "α+1");
    CHECK(r.failure_count() == 1);
    nlohmann::json j = r.to_json();
    CHECK(j[0]["status"] == "fail");
    CHECK(j[0]["lhs"] == "α");
    CHECK(j[0]["rhs"] == "α+1");
}
