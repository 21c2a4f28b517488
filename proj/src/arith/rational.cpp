#include "spinres/arith/rational.hpp"

#include "spinres/errors.hpp"

#include <cctype>

namespace spinres {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw UsageError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw UsageError("malformed rational: '" + std::string(whole) + "'");
        }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-') throw UsageError("malformed rational: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw UsageError("rational with zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer factorial(unsigned k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rising(const Rational& a, unsigned l) {
    Rational r(1);
    for (unsigned k = 0; k < l; ++k) r *= a + k;
    return r;
}

}  // namespace spinres
