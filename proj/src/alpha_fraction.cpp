#include "jackpoly/alpha_fraction.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace jackpoly {

AlphaFraction AlphaFraction::normalized(AlphaPolynomial num, AlphaPolynomial den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    AlphaFraction f;
    if (num.is_zero()) return f;
    if (den.is_one()) {
        f.num_ = std::move(num);
        return f;
    }
    AlphaPolynomial g = AlphaPolynomial::gcd(num, den);
    if (!g.is_one()) {
        num = AlphaPolynomial::exact_div(num, g);
        den = AlphaPolynomial::exact_div(den, g);
    }
    Rational inv_lead = Rational(1) / den.leading();
    f.num_ = num * inv_lead;
    f.den_ = den * inv_lead;
    return f;
}

AlphaFraction AlphaFraction::operator-() const {
    AlphaFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

AlphaFraction AlphaFraction::from_coprime(AlphaPolynomial num, AlphaPolynomial den) {
    AlphaFraction f;
    if (num.is_zero()) return f;
    if (den.is_one()) {
        f.num_ = std::move(num);
        return f;
    }
    if (den.leading() == 1) {
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }
    Rational inv_lead = Rational(1) / den.leading();
    f.num_ = num * inv_lead;
    f.den_ = den * inv_lead;
    return f;
}

// Sums and products reduce by cofactor gcds only, which keeps every gcd call
// on inputs that are already reduced pairs.
AlphaFraction operator+(const AlphaFraction& a, const AlphaFraction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    AlphaPolynomial g = AlphaPolynomial::gcd(a.den_, b.den_);
    if (g.is_one())
        return AlphaFraction::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    AlphaPolynomial bg = AlphaPolynomial::exact_div(b.den_, g);
    AlphaPolynomial num = a.num_ * bg + b.num_ * AlphaPolynomial::exact_div(a.den_, g);
    AlphaPolynomial h = AlphaPolynomial::gcd(num, g);
    if (h.is_one()) return AlphaFraction::from_coprime(std::move(num), a.den_ * bg);
    return AlphaFraction::from_coprime(AlphaPolynomial::exact_div(num, h),
                                       AlphaPolynomial::exact_div(a.den_, h) * bg);
}

AlphaFraction operator-(const AlphaFraction& a, const AlphaFraction& b) { return a + (-b); }

AlphaFraction operator*(const AlphaFraction& a, const AlphaFraction& b) {
    if (a.is_zero() || b.is_zero()) return AlphaFraction();
    AlphaPolynomial g1 = AlphaPolynomial::gcd(a.num_, b.den_);
    AlphaPolynomial g2 = AlphaPolynomial::gcd(b.num_, a.den_);
    AlphaPolynomial n1 = g1.is_one() ? a.num_ : AlphaPolynomial::exact_div(a.num_, g1);
    AlphaPolynomial n2 = g2.is_one() ? b.num_ : AlphaPolynomial::exact_div(b.num_, g2);
    AlphaPolynomial d1 = g2.is_one() ? a.den_ : AlphaPolynomial::exact_div(a.den_, g2);
    AlphaPolynomial d2 = g1.is_one() ? b.den_ : AlphaPolynomial::exact_div(b.den_, g1);
    return AlphaFraction::from_coprime(n1 * n2, d1 * d2);
}

AlphaFraction operator/(const AlphaFraction& a, const AlphaFraction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.inverse();
}

AlphaFraction AlphaFraction::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return from_coprime(den_, num_);
}

Rational AlphaFraction::evaluate_alpha(const Rational& a) const {
    Rational den_value = den_.evaluate(a);
    if (den_value == 0)
        throw std::domain_error("pole at α = " + jackpoly::to_string(a));
    return num_.evaluate(a) / den_value;
}

AlphaFraction rising_factorial_coefficient(const AlphaFraction& c, int k) {
    if (k < 0) throw std::invalid_argument("negative series index");
    AlphaFraction product(1);
    for (int j = 0; j < k; ++j) product *= c + AlphaFraction(j);
    return product / AlphaFraction(Rational(factorial(static_cast<unsigned long>(k))));
}

namespace {

int term_count(const AlphaPolynomial& p) {
    int n = 0;
    for (const auto& c : p.coefficients())
        if (c != 0) ++n;
    return n;
}

// Rewrites num/den with integer-coefficient polynomials N, D sharing no content.
void integer_form(const AlphaFraction& f, AlphaPolynomial& n_out, AlphaPolynomial& d_out) {
    Rational cn = f.num().content();
    if (cn == 0) {
        n_out = AlphaPolynomial();
        d_out = AlphaPolynomial(1);
        return;
    }
    Rational cd = f.den().content();
    Rational ratio = cn / cd;  // p/q reduced, q > 0
    n_out = f.num() * (Rational(ratio.get_num()) / cn);
    d_out = f.den() * (Rational(ratio.get_den()) / cd);
}

}  // namespace

std::string AlphaFraction::str() const {
    AlphaPolynomial n, d;
    integer_form(*this, n, d);
    if (d.is_one()) return n.str();
    std::string prefix;
    if (!n.is_zero() && n.leading() < 0) {
        prefix = "-";
        n = -n;
    }
    auto wrap = [](const AlphaPolynomial& p) {
        std::string s = p.str();
        return term_count(p) > 1 ? "(" + s + ")" : s;
    };
    return prefix + wrap(n) + "/" + wrap(d);
}

std::string AlphaFraction::latex() const {
    AlphaPolynomial n, d;
    integer_form(*this, n, d);
    if (d.is_one()) return n.latex();
    return "\\frac{" + n.latex() + "}{" + d.latex() + "}";
}

// --- plain-text parser -------------------------------------------------

namespace {

struct Lexer {
    std::string_view text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    // Token kinds: 0 end, '0' integer, 'a' alpha, one of "+-*/^()".
    char peek_kind() {
        skip_space();
        if (pos >= text.size()) return 0;
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) return '0';
        // UTF-8 "α" (0xCE 0xB1) or the keyword "alpha"/"a".
        if ((unsigned char)c == 0xCE && pos + 1 < text.size() && (unsigned char)text[pos + 1] == 0xB1)
            return 'a';
        if (c == 'a') return 'a';
        // U+00B7 "·" acts as '*'.
        if ((unsigned char)c == 0xC2 && pos + 1 < text.size() && (unsigned char)text[pos + 1] == 0xB7)
            return '*';
        if (std::string_view("+-*/^()").find(c) != std::string_view::npos) return c;
        throw std::invalid_argument("unexpected character in expression");
    }

    void consume(char kind) {
        skip_space();
        switch (kind) {
            case '0':
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                break;
            case 'a':
                if (text[pos] == 'a') {
                    pos += text.compare(pos, 5, "alpha") == 0 ? 5 : 1;
                } else {
                    pos += 2;  // UTF-8 α
                }
                break;
            case '*':
                pos += (unsigned char)text[pos] == 0xC2 ? 2 : 1;
                break;
            default:
                ++pos;
        }
    }

    Integer read_integer() {
        skip_space();
        size_t start = pos;
        consume('0');
        return Integer(std::string(text.substr(start, pos - start)));
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_{text} {}

    AlphaFraction parse() {
        AlphaFraction value = expression();
        if (lex_.peek_kind() != 0) throw std::invalid_argument("trailing input in expression");
        return value;
    }

private:
    AlphaFraction expression() {
        AlphaFraction acc = term();
        for (char k = lex_.peek_kind(); k == '+' || k == '-'; k = lex_.peek_kind()) {
            lex_.consume(k);
            AlphaFraction rhs = term();
            acc = (k == '+') ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    AlphaFraction term() {
        AlphaFraction acc = factor();
        while (true) {
            char k = lex_.peek_kind();
            if (k == '*' || k == '/') {
                lex_.consume(k);
                AlphaFraction rhs = factor();
                acc = (k == '*') ? acc * rhs : acc / rhs;
            } else if (k == '0' || k == 'a' || k == '(') {
                acc = acc * factor();  // juxtaposition, e.g. "3α"
            } else {
                return acc;
            }
        }
    }

    AlphaFraction factor() {
        char k = lex_.peek_kind();
        if (k == '-') {
            lex_.consume('-');
            return -factor();
        }
        if (k == '+') {
            lex_.consume('+');
            return factor();
        }
        AlphaFraction base = primary();
        if (lex_.peek_kind() == '^') {
            lex_.consume('^');
            if (lex_.peek_kind() != '0') throw std::invalid_argument("exponent must be an integer");
            Integer e = lex_.read_integer();
            if (e > 64) throw std::invalid_argument("exponent too large");
            AlphaFraction r(1);
            for (Integer i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    AlphaFraction primary() {
        char k = lex_.peek_kind();
        if (k == '0') return AlphaFraction(Rational(lex_.read_integer()));
        if (k == 'a') {
            lex_.consume('a');
            return AlphaFraction::alpha();
        }
        if (k == '(') {
            lex_.consume('(');
            AlphaFraction inner = expression();
            if (lex_.peek_kind() != ')') throw std::invalid_argument("missing ')'");
            lex_.consume(')');
            return inner;
        }
        throw std::invalid_argument("expected a value");
    }

    Lexer lex_;
};

}  // namespace

AlphaFraction AlphaFraction::parse(const std::string& text) { return Parser(text).parse(); }

// --- JSON ---------------------------------------------------------------

nlohmann::json AlphaFraction::to_json() const {
    auto poly = [](const AlphaPolynomial& p) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : p.coefficients()) a.push_back(jackpoly::to_string(c));
        if (p.is_zero()) a.push_back("0");
        return a;
    };
    return nlohmann::json{{"num", poly(num_)}, {"den", poly(den_)}};
}

AlphaFraction AlphaFraction::from_json(const nlohmann::json& j) {
    auto poly = [](const nlohmann::json& a) {
        std::vector<Rational> coeffs;
        for (const auto& item : a) coeffs.push_back(parse_rational(item.get<std::string>()));
        return AlphaPolynomial::from_coefficients(std::move(coeffs));
    };
    return normalized(poly(j.at("num")), poly(j.at("den")));
}

}  // namespace jackpoly
