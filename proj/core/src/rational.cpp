#include "fanocfg/rational.hpp"

#include "fanocfg/errors.hpp"

#include <cctype>

namespace fanocfg {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view text) {
    std::string digits(text);
    bool ok = !digits.empty();
    for (std::size_t i = 0; i < digits.size() && ok; ++i) {
        const bool sign_ok = i == 0 && digits[i] == '-' && digits.size() > 1;
        ok = sign_ok || std::isdigit(static_cast<unsigned char>(digits[i]));
    }
    if (!ok) throw ParseError("malformed integer '" + digits + "'", 0);
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)),
                         parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::map<Integer, unsigned> factor_integer(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    std::map<Integer, unsigned> out;
    Integer rest = abs(n);
    for (unsigned long p = 2; p <= 100000 && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            ++out[Integer(p)];
            rest /= p;
        }
    }
    if (rest > 1) ++out[rest];
    return out;
}

Integer multiply_factors(const std::map<Integer, unsigned>& factors) {
    Integer acc = 1;
    for (const auto& [p, e] : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        acc *= pe;
    }
    return acc;
}

} // namespace fanocfg
