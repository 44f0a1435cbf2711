#include "jackpoly/pairing.hpp"

#include <stdexcept>

namespace jackpoly {

void DualBasis::build_degree(int d, const TruncatedBiSeries& kernel) {
    std::vector<Composition> idx = kind_ == Kind::Nonsymmetric
                                       ? enumerate_compositions(n_, d)
                                       : enumerate_partitions(n_, d);
    const size_t m = idx.size();
    FracMatrix matrix(m, FracVector(m));
    for (size_t r = 0; r < m; ++r) {
        SparsePoly dual = kernel.coefficient_of_y(idx[r]);
        for (size_t c = 0; c < m; ++c) matrix[r][c] = dual.coefficient(idx[c]);
        dual_.emplace(idx[r], std::move(dual));
    }
    inverse_.push_back(invert(std::move(matrix)));
    index_.push_back(std::move(idx));
}

DualBasis DualBasis::nonsymmetric(int n, int cap) {
    if (cap < 0) throw std::invalid_argument("negative cap");
    DualBasis basis(Kind::Nonsymmetric, n, cap);
    TruncatedBiSeries kernel = TruncatedBiSeries::omega_kernel(n, cap);
    for (int d = 0; d <= cap; ++d) basis.build_degree(d, kernel);
    return basis;
}

DualBasis DualBasis::symmetric(int n, int cap) {
    if (cap < 0) throw std::invalid_argument("negative cap");
    DualBasis basis(Kind::Symmetric, n, cap);
    const AlphaFraction c = AlphaFraction(1) / AlphaFraction::alpha();
    TruncatedBiSeries kernel = TruncatedBiSeries::symmetric_kernel(n, n, c, cap);
    for (int d = 0; d <= cap; ++d) basis.build_degree(d, kernel);
    return basis;
}

const std::vector<Composition>& DualBasis::index(int d) const {
    if (d < 0 || d > cap_) throw std::domain_error("degree exceeds the basis cap");
    return index_[d];
}

const SparsePoly& DualBasis::dual_polynomial(const Composition& idx) const {
    auto it = dual_.find(idx);
    if (it == dual_.end()) throw std::domain_error("index outside the basis");
    return it->second;
}

FracVector DualBasis::dual_coordinates(const SparsePoly& homogeneous) const {
    if (!homogeneous.is_homogeneous())
        throw std::invalid_argument("coordinates need a homogeneous input");
    const int d = std::max(homogeneous.degree(), 0);
    if (d > cap_) throw std::domain_error("degree exceeds the basis cap");
    const auto& idx = index_[d];
    const auto& inv = inverse_[d];
    const size_t m = idx.size();
    FracVector v(m);
    for (size_t c = 0; c < m; ++c) v[c] = homogeneous.coefficient(idx[c]);
    // g = Σ_r coords[r]·dual_r and M[r][c] = [x^{idx_c}] dual_r give
    // coords = (M^T)^{-1} v = (M^{-1})^T v.
    FracVector coords(m);
    for (size_t r = 0; r < m; ++r) {
        AlphaFraction acc;
        for (size_t c = 0; c < m; ++c) {
            if (v[c].is_zero()) continue;
            acc += inv[c][r] * v[c];
        }
        coords[r] = std::move(acc);
    }
    return coords;
}

namespace {

AlphaFraction contract(const SparsePoly& f, const SparsePoly& g, const DualBasis& basis) {
    if (f.n() != basis.n() || g.n() != basis.n())
        throw std::invalid_argument("variable-count mismatch");
    if (f.degree() > basis.cap() || g.degree() > basis.cap())
        throw std::domain_error("degree exceeds the basis cap");
    AlphaFraction acc;
    const int dmax = std::min(f.degree(), g.degree());
    for (int d = 0; d <= dmax; ++d) {
        SparsePoly fd = f.homogeneous_component(d);
        SparsePoly gd = g.homogeneous_component(d);
        if (fd.is_zero() || gd.is_zero()) continue;
        const auto& idx = basis.index(d);
        FracVector coords = basis.dual_coordinates(gd);
        for (size_t r = 0; r < idx.size(); ++r) {
            if (coords[r].is_zero()) continue;
            AlphaFraction fc = fd.coefficient(idx[r]);
            if (!fc.is_zero()) acc += fc * coords[r];
        }
    }
    return acc;
}

}  // namespace

AlphaFraction pair_polynomials(const SparsePoly& f, const SparsePoly& g, const DualBasis& basis) {
    if (basis.kind() != DualBasis::Kind::Nonsymmetric)
        throw std::invalid_argument("nonsymmetric pairing needs the q-basis");
    return contract(f, g, basis);
}

AlphaFraction pair_symmetric(const SparsePoly& f, const SparsePoly& g, const DualBasis& basis) {
    if (basis.kind() != DualBasis::Kind::Symmetric)
        throw std::invalid_argument("symmetric pairing needs the g-basis");
    if (!f.is_symmetric() || !g.is_symmetric())
        throw std::invalid_argument("symmetric pairing needs symmetric inputs");
    return contract(f, g, basis);
}

}  // namespace jackpoly
