#include "jackpoly/operators.hpp"

#include <stdexcept>

namespace jackpoly {

namespace {

void check_pair(const SparsePoly& f, int i, int j) {
    if (i < 0 || j < 0 || i >= f.n() || j >= f.n() || i == j)
        throw std::out_of_range("bad variable pair");
}

}  // namespace

SparsePoly transpose_vars(const SparsePoly& f, int i, int j) {
    check_pair(f, i, j);
    SparsePoly r(f.n());
    ExponentVector e;
    for (const auto& [exps, c] : f.terms()) {
        e = exps;
        std::swap(e[i], e[j]);
        r.add_term(e, c);
    }
    return r;
}

SparsePoly divided_difference(const SparsePoly& f, int i, int j) {
    check_pair(f, i, j);
    SparsePoly r(f.n());
    ExponentVector e;
    for (const auto& [exps, c] : f.terms()) {
        const int a = exps[i], b = exps[j];
        if (a == b) continue;
        // (x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j) = ± Σ_t x_i^t x_j^{a+b-1-t},
        // t running over [min(a,b), max(a,b)).
        const AlphaFraction signed_c = a > b ? c : -c;
        e = exps;
        for (int t = std::min(a, b); t < std::max(a, b); ++t) {
            e[i] = t;
            e[j] = a + b - 1 - t;
            r.add_term(e, signed_c);
        }
    }
    return r;
}

SparsePoly cherednik_block(const SparsePoly& f, int i, int offset, int m) {
    if (i < 0 || i >= m || offset < 0 || offset + m > f.n())
        throw std::out_of_range("cherednik index");
    const int vi = offset + i;
    const AlphaFraction alpha = AlphaFraction::alpha();
    SparsePoly acc = f.partial_derivative(vi) * SparsePoly::variable(f.n(), vi) * alpha;
    for (int j = 0; j < i; ++j) {
        const int vj = offset + j;
        acc += divided_difference(f * SparsePoly::variable(f.n(), vj), vi, vj);
    }
    for (int j = i + 1; j < m; ++j) {
        const int vj = offset + j;
        acc += divided_difference(f, vi, vj) * SparsePoly::variable(f.n(), vj);
    }
    return acc;
}

SparsePoly cherednik(const SparsePoly& f, int i) { return cherednik_block(f, i, 0, f.n()); }

SparsePoly phi_raise(const SparsePoly& f) {
    const int n = f.n();
    SparsePoly r(n);
    ExponentVector e(n);
    for (const auto& [exps, c] : f.terms()) {
        for (int k = 0; k + 1 < n; ++k) e[k] = exps[k + 1];
        e[n - 1] = exps[0] + 1;
        r.add_term(e, c);
    }
    return r;
}

}  // namespace jackpoly
