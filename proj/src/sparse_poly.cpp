#include "jackpoly/sparse_poly.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace jackpoly {

namespace {

void check_same_vars(const SparsePoly& a, const SparsePoly& b) {
    if (a.n() != b.n()) throw std::invalid_argument("variable-count mismatch");
}

}  // namespace

SparsePoly SparsePoly::monomial(int n, ExponentVector exps, AlphaFraction coeff) {
    if (static_cast<int>(exps.size()) != n)
        throw std::invalid_argument("exponent length does not match variable count");
    SparsePoly p(n);
    p.add_term(exps, coeff);
    return p;
}

SparsePoly SparsePoly::variable(int n, int i) {
    if (i < 0 || i >= n) throw std::out_of_range("variable index");
    ExponentVector e(n, 0);
    e[i] = 1;
    return monomial(n, std::move(e));
}

void SparsePoly::add_term(const ExponentVector& exps, const AlphaFraction& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlphaFraction SparsePoly::coefficient(const ExponentVector& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? AlphaFraction() : it->second;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    check_same_vars(a, b);
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    check_same_vars(a, b);
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_same_vars(a, b);
    SparsePoly r(a.n_);
    ExponentVector e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePoly operator*(const SparsePoly& a, const AlphaFraction& c) {
    SparsePoly r(a.n_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, x * c);
    return r;
}

SparsePoly SparsePoly::partial_derivative(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index");
    SparsePoly r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        ExponentVector d = e;
        d[i] -= 1;
        r.add_term(d, c * AlphaFraction(e[i]));
    }
    return r;
}

AlphaFraction SparsePoly::evaluate(std::span<const AlphaFraction> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("point length does not match variable count");
    // Powers are memoized per variable.
    std::vector<std::vector<AlphaFraction>> powers(n_, {AlphaFraction(1)});
    auto power = [&](int i, int k) -> const AlphaFraction& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * point[i]);
        return cache[k];
    };
    AlphaFraction acc;
    for (const auto& [e, c] : terms_) {
        AlphaFraction term = c;
        for (int i = 0; i < n_; ++i)
            if (e[i] > 0) term *= power(i, e[i]);
        acc += term;
    }
    return acc;
}

AlphaFraction SparsePoly::eval_ones() const {
    AlphaFraction acc;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

int SparsePoly::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

SparsePoly SparsePoly::homogeneous_component(int d) const {
    SparsePoly r(n_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

SparsePoly SparsePoly::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation length");
    SparsePoly r(n_);
    ExponentVector moved(n_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < n_; ++i) moved[perm[i]] = e[i];
        r.terms_.emplace(moved, c);
    }
    return r;
}

SparsePoly SparsePoly::set_var_zero(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index");
    SparsePoly r(n_);
    for (const auto& [e, c] : terms_)
        if (e[i] == 0) r.terms_.emplace(e, c);
    return r;
}

SparsePoly SparsePoly::drop_last_var() const {
    SparsePoly r(n_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e.back() != 0) throw std::logic_error("dropped variable still occurs");
        r.terms_.emplace(ExponentVector(e.begin(), e.end() - 1), c);
    }
    return r;
}

bool SparsePoly::is_symmetric() const {
    std::vector<int> perm(n_);
    for (int k = 0; k + 1 < n_; ++k) {
        for (int i = 0; i < n_; ++i) perm[i] = i;
        std::swap(perm[k], perm[k + 1]);
        if (permute_vars(perm) != *this) return false;
    }
    return true;
}

// --- rendering ------------------------------------------------------------

namespace {

std::string default_name(int i, bool latex) {
    return latex ? "x_{" + std::to_string(i + 1) + "}" : "x" + std::to_string(i + 1);
}

std::string monomial_text(const ExponentVector& e, const std::vector<std::string>& names,
                          bool latex) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty() && !latex) out += "·";
        out += names.empty() ? default_name(static_cast<int>(i), latex) : names[i];
        if (e[i] > 1)
            out += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
    }
    return out;
}

// True when the coefficient renders as a single multiplicative token.
bool coefficient_is_simple(const AlphaFraction& c) {
    if (!c.den().is_one()) return false;
    int nonzero = 0;
    for (const auto& q : c.num().coefficients())
        if (q != 0) ++nonzero;
    return nonzero == 1 && is_integer(c.num().leading());
}

bool leading_negative(const AlphaFraction& c) {
    return !c.is_zero() && c.num().leading() < 0;
}

std::string render_poly(const SparsePoly& p, const std::vector<std::string>& names, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        AlphaFraction c = it->second;
        const bool neg = leading_negative(c);
        if (neg) c = -c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? "-" : "+");
        first = false;
        std::string mono = monomial_text(it->first, names, latex);
        if (mono.empty()) {
            out << (latex ? c.latex() : c.str());
            continue;
        }
        if (c.is_one()) {
            out << mono;
            continue;
        }
        if (latex) {
            std::string cs = c.latex();
            out << (coefficient_is_simple(c) || cs.starts_with("\\frac") ? cs : "(" + cs + ")")
                << mono;
        } else {
            std::string cs = c.str();
            out << (coefficient_is_simple(c) ? cs : "(" + cs + ")") << "·" << mono;
        }
    }
    return out.str();
}

}  // namespace

std::string SparsePoly::str(const std::vector<std::string>& names) const {
    return render_poly(*this, names, false);
}

std::string SparsePoly::latex(const std::vector<std::string>& names) const {
    return render_poly(*this, names, true);
}

// --- JSON ------------------------------------------------------------------

nlohmann::json SparsePoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        terms.push_back(nlohmann::json{{"exponents", e}, {"coeff", c.to_json()}});
    return nlohmann::json{{"version", 1}, {"vars", n_}, {"terms", std::move(terms)}};
}

SparsePoly SparsePoly::from_json(const nlohmann::json& j) {
    if (j.at("version").get<int>() != 1) throw std::invalid_argument("unsupported version");
    SparsePoly p(j.at("vars").get<int>());
    for (const auto& t : j.at("terms")) {
        ExponentVector e = t.at("exponents").get<ExponentVector>();
        if (static_cast<int>(e.size()) != p.n())
            throw std::invalid_argument("exponent length does not match variable count");
        p.add_term(e, AlphaFraction::from_json(t.at("coeff")));
    }
    return p;
}

}  // namespace jackpoly
