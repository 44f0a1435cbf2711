#include "jackpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace jackpoly {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_decimal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = strip(text);
    const size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_decimal(s)) throw std::invalid_argument("malformed rational: '" + text + "'");
        return Rational(Integer(s));
    }
    const std::string num = strip(s.substr(0, slash));
    const std::string den = strip(s.substr(slash + 1));
    if (!is_decimal(num) || !is_decimal(den))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    return make_rational(Integer(num), std::move(d));
}

Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

}  // namespace jackpoly
