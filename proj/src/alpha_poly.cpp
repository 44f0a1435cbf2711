#include "jackpoly/alpha_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jackpoly {

AlphaPolynomial::AlphaPolynomial(Rational value) {
    if (value != 0) coeffs_.push_back(std::move(value));
}

AlphaPolynomial AlphaPolynomial::alpha() {
    AlphaPolynomial p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

AlphaPolynomial AlphaPolynomial::from_coefficients(std::vector<Rational> coeffs) {
    AlphaPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void AlphaPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool AlphaPolynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& AlphaPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational AlphaPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

AlphaPolynomial AlphaPolynomial::operator-() const {
    AlphaPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

AlphaPolynomial operator+(const AlphaPolynomial& a, const AlphaPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return AlphaPolynomial::from_coefficients(std::move(out));
}

AlphaPolynomial operator-(const AlphaPolynomial& a, const AlphaPolynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return AlphaPolynomial::from_coefficients(std::move(out));
}

AlphaPolynomial operator*(const AlphaPolynomial& a, const AlphaPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return AlphaPolynomial::from_coefficients(std::move(out));
}

AlphaPolynomial operator*(const AlphaPolynomial& a, const Rational& c) {
    if (c == 0) return {};
    AlphaPolynomial r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<AlphaPolynomial, AlphaPolynomial> AlphaPolynomial::divrem(const AlphaPolynomial& a,
                                                                    const AlphaPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {AlphaPolynomial(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(a.degree() - b.degree() + 1, Rational(0));
    const Rational& lead = b.leading();
    for (int k = a.degree(); k >= b.degree(); --k) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] / lead;
        quo[k - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= q * b.coeffs_[j];
    }
    return {from_coefficients(std::move(quo)), from_coefficients(std::move(rem))};
}

AlphaPolynomial AlphaPolynomial::exact_div(const AlphaPolynomial& a, const AlphaPolynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division left a remainder");
    return q;
}

namespace {

// Coprimality fast path: a gcd of degree zero modulo a prime that divides no
// leading coefficient certifies coprimality over Q.
constexpr unsigned long kModulus = 2305843009213693951ul;  // 2^61 - 1

unsigned long mulmod(unsigned long a, unsigned long b) {
    return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % kModulus);
}

unsigned long powmod(unsigned long base, unsigned long exp) {
    unsigned long acc = 1;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return acc;
}

bool to_modular(const AlphaPolynomial& p, std::vector<unsigned long>& out) {
    out.clear();
    out.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients()) {
        unsigned long den = mpz_fdiv_ui(c.get_den().get_mpz_t(), kModulus);
        if (den == 0) return false;
        unsigned long num = mpz_fdiv_ui(c.get_num().get_mpz_t(), kModulus);
        out.push_back(mulmod(num, powmod(den, kModulus - 2)));
    }
    return !out.empty() && out.back() != 0;  // true degree must survive reduction
}

bool coprime_modular(const AlphaPolynomial& a, const AlphaPolynomial& b) {
    std::vector<unsigned long> x, y;
    if (!to_modular(a, x) || !to_modular(b, y)) return false;
    while (!y.empty()) {
        // x mod y
        unsigned long inv_lead = powmod(y.back(), kModulus - 2);
        while (x.size() >= y.size()) {
            unsigned long q = mulmod(x.back(), inv_lead);
            const size_t shift = x.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i) {
                unsigned long sub = mulmod(q, y[i]);
                x[shift + i] = (x[shift + i] + kModulus - sub) % kModulus;
            }
            while (!x.empty() && x.back() == 0) x.pop_back();
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    return x.size() == 1;
}

}  // namespace

AlphaPolynomial AlphaPolynomial::gcd(const AlphaPolynomial& a, const AlphaPolynomial& b) {
    if (!a.is_zero() && !b.is_zero()) {
        if (a.degree() == 0 || b.degree() == 0) return AlphaPolynomial(1);
        if (coprime_modular(a, b)) return AlphaPolynomial(1);
    }
    AlphaPolynomial x = a, y = b;
    while (!y.is_zero()) {
        AlphaPolynomial r = divrem(x, y).second;
        if (!r.is_zero()) r = r * (Rational(1) / r.leading());  // keeps coefficients small
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * (Rational(1) / x.leading());
}

Rational AlphaPolynomial::evaluate(const Rational& a) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

Rational AlphaPolynomial::content() const {
    if (is_zero()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        Integer n;
        mpz_gcd(n.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        num_gcd = n;
        Integer l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    return make_rational(std::move(num_gcd), std::move(den_lcm));
}

namespace {

// One "c·α^k" term; |c| != 0.
std::string term_text(const Rational& c, int k, bool latex) {
    const std::string alpha = latex ? "\\alpha" : "α";
    std::string mono;
    if (k == 1)
        mono = alpha;
    else if (k > 1)
        mono = alpha + (latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k));
    if (k == 0) {
        if (!latex || is_integer(c)) return to_string(c);
        return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    }
    if (c == 1) return mono;
    if (is_integer(c)) return to_string(c) + mono;
    if (latex)
        return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}" + mono;
    return "(" + to_string(c) + ")" + mono;
}

std::string render(const std::vector<Rational>& coeffs, bool latex) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const Rational& c = coeffs[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? '-' : '+');
        }
        out << term_text(neg ? Rational(-c) : c, k, latex);
    }
    return out.str();
}

}  // namespace

std::string AlphaPolynomial::str() const { return render(coeffs_, false); }

std::string AlphaPolynomial::latex() const { return render(coeffs_, true); }

}  // namespace jackpoly
