#pragma once

#include <map>
#include <string>

#include "jackpoly/composition.hpp"
#include "jackpoly/sparse_poly.hpp"

namespace jackpoly {

// How a cached monic polynomial was produced.
struct BuildStep {
    enum class Kind { Base, Raise, Swap } kind = Kind::Base;
    Composition parent;  // empty for Base
    int swap_index = -1;  // for Swap: the adjacent pair (0-based)
};

// Table of nonsymmetric Jack polynomials in n variables, built degree by
// degree. Each orbit of a partition starts from its weakly increasing
// rearrangement (raised from the previous degree) and spreads by adjacent
// transpositions: E_η = (s_i + 1/d)·E_{s_iη} when η_i > η_{i+1}, with
// d = η̄_i - η̄_{i+1} taken from η's spectral vector.
class JackTable {
public:
    explicit JackTable(int n);

    int n() const { return n_; }

    // Builds every composition of every degree up to and including d.
    void ensure_degree(int d);

    // Monic E_η (coefficient 1 on x^η).
    const SparsePoly& monic(const Composition& eta);
    // Integral form F_η = d_η·E_η.
    SparsePoly integral(const Composition& eta);
    // Symmetric integral form via the orbit sum J_λ = j_λ·Σ_{η⁺=λ} F_η/f_η.
    SparsePoly symmetric_integral(const Composition& lambda);
    // Monic symmetric form P_λ = J_λ/c_λ.
    SparsePoly symmetric_monic(const Composition& lambda);

    const BuildStep& provenance(const Composition& eta) const;

private:
    void build_degree(int d);

    int n_;
    int sealed_degree_ = -1;
    std::map<Composition, SparsePoly> monic_;
    std::map<Composition, BuildStep> provenance_;
};

// Independent construction of the monic E_η: ansatz x^η plus all strictly
// dominance-lower monomials of the same degree, solved against the full set
// of Cherednik eigen-equations. Throws std::logic_error if the system fails
// to determine a unique solution.
SparsePoly build_monic_oracle(const Composition& eta);

// Independent construction of J_λ: the unique symmetric combination of the
// orbit polynomials {E_η : η⁺ = λ} with x^λ-coefficient 1, scaled by c_λ.
SparsePoly symmetric_integral_oracle(JackTable& table, const Composition& lambda);

// m_λ: the sum of x^η over all distinct rearrangements η of λ.
SparsePoly monomial_symmetric(const Composition& lambda);

// Coordinates of a homogeneous polynomial in the monic E-basis of its degree,
// found by repeatedly stripping a dominance-maximal monomial. Throws
// std::logic_error if the expansion does not terminate cleanly.
std::map<Composition, AlphaFraction> expand_in_monic_basis(JackTable& table,
                                                           const SparsePoly& f);

}  // namespace jackpoly
