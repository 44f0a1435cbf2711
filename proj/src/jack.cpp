#include "jackpoly/jack.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "jackpoly/linalg.hpp"
#include "jackpoly/operators.hpp"

namespace jackpoly {

JackTable::JackTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
}

void JackTable::ensure_degree(int d) {
    while (sealed_degree_ < d) build_degree(sealed_degree_ + 1);
}

void JackTable::build_degree(int d) {
    if (d == 0) {
        Composition zero(n_, 0);
        monic_.emplace(zero, SparsePoly::one(n_));
        provenance_.emplace(zero, BuildStep{BuildStep::Kind::Base, {}, -1});
        sealed_degree_ = 0;
        return;
    }
    for (const Composition& lambda : enumerate_partitions(n_, d)) {
        // Weakly increasing rearrangement; its Φ-preimage sits one degree down.
        Composition increasing = lambda;
        std::sort(increasing.begin(), increasing.end());
        Composition preimage(1, increasing.back() - 1);
        preimage.insert(preimage.end(), increasing.begin(), increasing.end() - 1);
        monic_.emplace(increasing, phi_raise(monic_.at(preimage)));
        provenance_.emplace(increasing, BuildStep{BuildStep::Kind::Raise, preimage, -1});

        std::deque<Composition> frontier{increasing};
        size_t built = 1;
        while (!frontier.empty()) {
            Composition zeta = std::move(frontier.front());
            frontier.pop_front();
            for (int i = 0; i + 1 < n_; ++i) {
                if (zeta[i] >= zeta[i + 1]) continue;
                Composition eta = zeta;
                std::swap(eta[i], eta[i + 1]);  // eta_i > eta_{i+1}
                if (monic_.contains(eta)) continue;
                std::vector<AlphaFraction> ebar = eigenvalue_vector(eta);
                AlphaFraction dgap = ebar[i] - ebar[i + 1];
                const SparsePoly& known = monic_.at(zeta);
                monic_.emplace(eta, transpose_vars(known, i, i + 1) + known * dgap.inverse());
                provenance_.emplace(eta, BuildStep{BuildStep::Kind::Swap, zeta, i});
                frontier.push_back(std::move(eta));
                ++built;
            }
        }
        if (built != distinct_permutations(lambda).size())
            throw std::logic_error("orbit traversal left gaps");
    }
    sealed_degree_ = d;
}

const SparsePoly& JackTable::monic(const Composition& eta) {
    if (static_cast<int>(eta.size()) != n_) throw std::invalid_argument("length mismatch");
    if (!is_composition(eta)) throw std::invalid_argument("negative part");
    ensure_degree(weight(eta));
    return monic_.at(eta);
}

SparsePoly JackTable::integral(const Composition& eta) {
    return monic(eta) * composition_constants(eta).d;
}

SparsePoly JackTable::symmetric_integral(const Composition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    SparsePoly sum(n_);
    for (const Composition& eta : distinct_permutations(lambda))
        sum += integral(eta) * composition_constants(eta).f.inverse();
    return sum * partition_constants(lambda).j;
}

SparsePoly JackTable::symmetric_monic(const Composition& lambda) {
    return symmetric_integral(lambda) * partition_constants(lambda).c.inverse();
}

const BuildStep& JackTable::provenance(const Composition& eta) const {
    return provenance_.at(eta);
}

SparsePoly build_monic_oracle(const Composition& eta) {
    if (!is_composition(eta) || eta.empty()) throw std::invalid_argument("bad composition");
    const int n = static_cast<int>(eta.size());
    const int d = weight(eta);

    std::vector<Composition> lower;
    std::vector<Composition> all = enumerate_compositions(n, d);
    for (const Composition& zeta : all)
        if (dominance_compare(zeta, eta) == DominanceRelation::Less) lower.push_back(zeta);

    std::vector<AlphaFraction> ebar = eigenvalue_vector(eta);

    // ξ_i applied to each candidate monomial, reused across equations.
    auto xi_of_monomial = [&](const Composition& exps, int i) {
        return cherednik(SparsePoly::monomial(n, exps), i);
    };

    // Unknowns: coefficients on the lower monomials. Equations: every monomial
    // coefficient of ξ_i f - η̄_i f for every i.
    std::map<Composition, size_t> row_index;
    for (size_t m = 0; m < all.size(); ++m) row_index[all[m]] = m;
    const size_t block = all.size();
    FracMatrix a(n * block, FracVector(lower.size()));
    FracVector b(n * block);

    for (int i = 0; i < n; ++i) {
        SparsePoly lead = xi_of_monomial(eta, i);
        lead.add_term(eta, -ebar[i]);
        for (const auto& [exps, c] : lead.terms()) b[i * block + row_index.at(exps)] = -c;
        for (size_t u = 0; u < lower.size(); ++u) {
            SparsePoly col = xi_of_monomial(lower[u], i);
            col.add_term(lower[u], -ebar[i]);
            for (const auto& [exps, c] : col.terms()) a[i * block + row_index.at(exps)][u] = c;
        }
    }

    auto solution = solve_unique(std::move(a), std::move(b));
    if (!solution) throw std::logic_error("eigen system is singular");
    SparsePoly f = SparsePoly::monomial(n, eta);
    for (size_t u = 0; u < lower.size(); ++u) f.add_term(lower[u], (*solution)[u]);
    return f;
}

SparsePoly symmetric_integral_oracle(JackTable& table, const Composition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    const int n = table.n();
    std::vector<Composition> orbit = distinct_permutations(lambda);
    // Put λ first so the normalization pins its coefficient.
    auto it = std::find(orbit.begin(), orbit.end(), lambda);
    std::iter_swap(orbit.begin(), it);

    std::vector<const SparsePoly*> basis;
    for (const Composition& eta : orbit) basis.push_back(&table.monic(eta));

    // f = E_λ + Σ_{η≠λ} a_η·E_η with s_k f = f for every adjacent k.
    std::map<Composition, size_t> row_index;
    std::vector<Composition> all = enumerate_compositions(n, weight(lambda));
    for (size_t m = 0; m < all.size(); ++m) row_index[all[m]] = m;
    const size_t block = all.size();
    const size_t unknowns = orbit.size() - 1;
    FracMatrix a((n - 1) * block, FracVector(unknowns));
    FracVector b((n - 1) * block);

    for (int k = 0; k + 1 < n; ++k) {
        SparsePoly lead = transpose_vars(*basis[0], k, k + 1) - *basis[0];
        for (const auto& [exps, c] : lead.terms()) b[k * block + row_index.at(exps)] = -c;
        for (size_t u = 0; u < unknowns; ++u) {
            SparsePoly col = transpose_vars(*basis[u + 1], k, k + 1) - *basis[u + 1];
            for (const auto& [exps, c] : col.terms())
                a[k * block + row_index.at(exps)][u] = c;
        }
    }

    auto solution = unknowns == 0 ? std::optional<FracVector>(FracVector{})
                                  : solve_unique(std::move(a), std::move(b));
    if (!solution) throw std::logic_error("symmetrization system is singular");
    SparsePoly f = *basis[0];
    for (size_t u = 0; u < unknowns; ++u) f += *basis[u + 1] * (*solution)[u];
    return f * partition_constants(lambda).c;
}

SparsePoly monomial_symmetric(const Composition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    const int n = static_cast<int>(lambda.size());
    SparsePoly m(n);
    for (const Composition& eta : distinct_permutations(lambda)) m.add_term(eta, AlphaFraction(1));
    return m;
}

std::map<Composition, AlphaFraction> expand_in_monic_basis(JackTable& table,
                                                           const SparsePoly& f) {
    if (!f.is_homogeneous()) throw std::invalid_argument("expansion needs a homogeneous input");
    std::map<Composition, AlphaFraction> out;
    SparsePoly rest = f;
    size_t guard = rest.is_zero() ? 0 : enumerate_compositions(f.n(), f.degree()).size() + 1;
    while (!rest.is_zero()) {
        if (guard-- == 0) throw std::logic_error("expansion did not terminate");
        // A dominance-maximal monomial of the remainder.
        const Composition* top = nullptr;
        for (const auto& [exps, c] : rest.terms()) {
            bool maximal = true;
            for (const auto& [other, c2] : rest.terms()) {
                if (&other == &exps) continue;
                if (dominance_compare(other, exps) == DominanceRelation::Greater) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) {
                top = &exps;
                break;
            }
        }
        if (top == nullptr) throw std::logic_error("no maximal monomial");
        Composition index = *top;
        AlphaFraction coeff = rest.coefficient(index);
        rest -= table.monic(index) * coeff;
        out.emplace(std::move(index), std::move(coeff));
    }
    return out;
}

}  // namespace jackpoly
