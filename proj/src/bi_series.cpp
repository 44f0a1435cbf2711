#include "jackpoly/bi_series.hpp"

#include <stdexcept>

namespace jackpoly {

int TruncatedBiSeries::x_degree(const ExponentVector& e) const {
    int d = 0;
    for (int i = 0; i < nx_; ++i) d += e[i];
    return d;
}

int TruncatedBiSeries::y_degree(const ExponentVector& e) const {
    int d = 0;
    for (int i = 0; i < ny_; ++i) d += e[nx_ + i];
    return d;
}

TruncatedBiSeries TruncatedBiSeries::one(int nx, int ny, int cap) {
    TruncatedBiSeries s(nx, ny, cap);
    s.terms_ = SparsePoly::one(nx + ny);
    return s;
}

TruncatedBiSeries TruncatedBiSeries::binomial_factor(int nx, int ny, const AlphaFraction& c,
                                                     int i, int j, int cap) {
    if (i < 0 || i >= nx || j < 0 || j >= ny) throw std::out_of_range("kernel factor index");
    if (cap < 0) throw std::invalid_argument("negative cap");
    TruncatedBiSeries s(nx, ny, cap);
    for (int k = 0; k <= cap; ++k) {
        ExponentVector e(nx + ny, 0);
        e[i] = k;
        e[nx + j] = k;
        s.terms_.add_term(e, rising_factorial_coefficient(c, k));
    }
    return s;
}

TruncatedBiSeries TruncatedBiSeries::multiply(const TruncatedBiSeries& other) const {
    if (nx_ != other.nx_ || ny_ != other.ny_ || cap_ != other.cap_)
        throw std::invalid_argument("series shape mismatch");
    TruncatedBiSeries r(nx_, ny_, cap_);
    ExponentVector e(nx_ + ny_);
    for (const auto& [ea, ca] : terms_.terms()) {
        for (const auto& [eb, cb] : other.terms_.terms()) {
            int xdeg = 0;
            for (int i = 0; i < nx_; ++i) xdeg += ea[i] + eb[i];
            if (xdeg > cap_) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.terms_.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncatedBiSeries TruncatedBiSeries::omega_kernel(int n, int cap) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
    if (cap < 0) throw std::invalid_argument("negative cap");
    const AlphaFraction one_over_alpha = AlphaFraction(1) / AlphaFraction::alpha();
    TruncatedBiSeries acc = one(n, n, cap);
    for (int i = 0; i < n; ++i)
        acc = acc.multiply(binomial_factor(n, n, AlphaFraction(1), i, i, cap));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc = acc.multiply(binomial_factor(n, n, one_over_alpha, i, j, cap));
    return acc;
}

TruncatedBiSeries TruncatedBiSeries::symmetric_kernel(int nx, int ny, const AlphaFraction& c,
                                                      int cap) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("need at least one variable");
    if (cap < 0) throw std::invalid_argument("negative cap");
    TruncatedBiSeries acc = one(nx, ny, cap);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) acc = acc.multiply(binomial_factor(nx, ny, c, i, j, cap));
    return acc;
}

SparsePoly TruncatedBiSeries::coefficient_of_y(const ExponentVector& gamma) const {
    if (static_cast<int>(gamma.size()) != ny_)
        throw std::invalid_argument("index length does not match y-variable count");
    if (total_degree(gamma) > cap_)
        throw std::domain_error("index degree exceeds the truncation cap");
    SparsePoly out(nx_);
    for (const auto& [e, c] : terms_.terms()) {
        bool match = true;
        for (int j = 0; j < ny_; ++j)
            if (e[nx_ + j] != gamma[j]) {
                match = false;
                break;
            }
        if (match) out.add_term(ExponentVector(e.begin(), e.begin() + nx_), c);
    }
    return out;
}

TruncatedBiSeries TruncatedBiSeries::swap_xy() const {
    if (nx_ != ny_) throw std::logic_error("swap requires equally sized variable sets");
    TruncatedBiSeries r(nx_, ny_, cap_);
    ExponentVector e(2 * nx_);
    for (const auto& [old_e, c] : terms_.terms()) {
        for (int i = 0; i < nx_; ++i) {
            e[i] = old_e[nx_ + i];
            e[nx_ + i] = old_e[i];
        }
        r.terms_.add_term(e, c);
    }
    return r;
}

TruncatedBiSeries TruncatedBiSeries::truncated(int new_cap) const {
    TruncatedBiSeries r(nx_, ny_, new_cap);
    for (const auto& [e, c] : terms_.terms())
        if (x_degree(e) <= new_cap) r.terms_.add_term(e, c);
    return r;
}

std::string TruncatedBiSeries::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < nx_; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int j = 0; j < ny_; ++j) names.push_back("y" + std::to_string(j + 1));
    return terms_.str(names);
}

}  // namespace jackpoly
