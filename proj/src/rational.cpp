#include "mzv/rational.hpp"

#include <cctype>

#include "mzv/error.hpp"

namespace mzv {

Rational make_rational(long num, long den) {
    if (den == 0) throw ContractError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ContractError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) throw ParseError("expected digits in rational", start);
        return std::string(text.substr(start, p - start));
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    Integer num(digits(pos));
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t at = pos;
        den = Integer(digits(pos));
        if (den == 0) throw ParseError("zero denominator", at);
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    if (negative) num = -num;
    return make_rational(num, den);
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace mzv
