#pragma once

#include <map>
#include <vector>

#include "jackpoly/bi_series.hpp"
#include "jackpoly/composition.hpp"
#include "jackpoly/linalg.hpp"
#include "jackpoly/sparse_poly.hpp"

namespace jackpoly {

// Degree-graded dual basis extracted from a Cauchy-type kernel, with the
// per-degree change-of-basis matrices and their inverses.
//
// Nonsymmetric flavor: q_γ read off the kernel Ω as the coefficient of y^γ;
// the pairing satisfies <x^η, q_γ> = δ_{ηγ}. Symmetric flavor: g_λ read off
// the purely 1/α kernel as the coefficient of y^λ; <m_λ, g_μ>_s = δ_{λμ}.
class DualBasis {
public:
    enum class Kind { Nonsymmetric, Symmetric };

    static DualBasis nonsymmetric(int n, int cap);
    static DualBasis symmetric(int n, int cap);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int cap() const { return cap_; }

    // Index set of degree d: all compositions (nonsymmetric) or all
    // partitions (symmetric).
    const std::vector<Composition>& index(int d) const;
    const SparsePoly& dual_polynomial(const Composition& idx) const;

    // Coordinates of a homogeneous polynomial in the dual basis of its
    // degree, ordered like index(d).
    FracVector dual_coordinates(const SparsePoly& homogeneous) const;

private:
    DualBasis(Kind kind, int n, int cap) : kind_(kind), n_(n), cap_(cap) {}
    void build_degree(int d, const TruncatedBiSeries& kernel);

    Kind kind_;
    int n_, cap_;
    std::vector<std::vector<Composition>> index_;      // per degree
    std::vector<FracMatrix> inverse_;                  // per degree, (M^{-1})
    std::map<Composition, SparsePoly> dual_;
};

// The combinatorial scalar product <f, g>: expand g degree-by-degree in the
// q-basis, contract with the monomial coefficients of f. Bilinear over F;
// components of different degrees pair to zero. Throws std::domain_error
// when a degree exceeds the basis cap.
AlphaFraction pair_polynomials(const SparsePoly& f, const SparsePoly& g, const DualBasis& basis);

// The symmetric product <f, g>_s via the m/g duality; both inputs must be
// symmetric (std::invalid_argument otherwise).
AlphaFraction pair_symmetric(const SparsePoly& f, const SparsePoly& g, const DualBasis& basis);

}  // namespace jackpoly
