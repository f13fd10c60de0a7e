#include "fanocfg/poly_text.hpp"

#include "fanocfg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace fanocfg {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> variables)
        : variables_(variables) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            chars_.push_back(text[i]);
            origin_.push_back(i);
        }
        end_position_ = text.size();
    }

    QPoly parse() {
        QPoly result(variables_.size());
        if (chars_.empty()) fail("empty polynomial");
        bool negate = false;
        if (peek() == '-' && !next_is_digit(1)) {
            negate = true;
            ++pos_;
        }
        parse_term(result, negate);
        while (pos_ < chars_.size()) {
            const char op = peek();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-' but found '") + op + "'");
            ++pos_;
            parse_term(result, op == '-');
        }
        return result;
    }

private:
    char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

    bool next_is_digit(std::size_t offset) const {
        const std::size_t i = pos_ + offset;
        return i < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[i]));
    }

    std::size_t position() const { return pos_ < origin_.size() ? origin_[pos_] : end_position_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

    Integer parse_digits() {
        std::string digits;
        while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_])))
            digits.push_back(chars_[pos_++]);
        if (digits.empty()) fail("expected digits");
        return Integer(digits, 10);
    }

    Rational parse_coeff() {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        Integer num = parse_digits();
        Integer den = 1;
        if (peek() == '/') {
            ++pos_;
            if (!next_is_digit(0)) fail("expected a positive denominator");
            den = parse_digits();
            if (den == 0) fail("zero denominator");
        }
        Rational q = make_rational(num, den);
        return negative ? Rational(-q) : q;
    }

    void parse_factor(Monomial& m) {
        const std::size_t start = pos_;
        if (peek() != 'x') fail("expected a variable");
        ++pos_;
        if (!next_is_digit(0)) fail("expected a digit after 'x'");
        const std::string name{'x', chars_[pos_++]};
        auto it = std::find(variables_.begin(), variables_.end(), name);
        if (it == variables_.end()) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        const auto index = static_cast<std::size_t>(it - variables_.begin());
        unsigned power = 1;
        if (peek() == '^') {
            ++pos_;
            if (!next_is_digit(0)) fail("exponent must be a positive integer");
            const Integer e = parse_digits();
            if (peek() == '/' || peek() == '.') fail("exponent must be a positive integer");
            if (e == 0 || e > 1000) fail("exponent must be a positive integer");
            power = static_cast<unsigned>(e.get_ui());
        }
        m.exp[index] = static_cast<std::uint16_t>(m.exp[index] + power);
    }

    void parse_term(QPoly& out, bool negate) {
        Rational coeff = 1;
        Monomial m;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
            coeff = parse_coeff();
            if (peek() != '*') {
                out.add_term(m, negate ? Rational(-coeff) : coeff);
                return;
            }
            ++pos_;
        }
        parse_factor(m);
        while (peek() == '*') {
            ++pos_;
            if (peek() != 'x') fail("expected a variable after '*'");
            parse_factor(m);
        }
        out.add_term(m, negate ? Rational(-coeff) : coeff);
    }

    std::span<const std::string> variables_;
    std::vector<char> chars_;
    std::vector<std::size_t> origin_;
    std::size_t end_position_ = 0;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, std::size_t nvars) {
    std::string out;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out;
}

template <class K, class CoeffText>
std::string render(const MPoly<K>& p, CoeffText&& coeff_text) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        auto [negative, magnitude, is_unit] = coeff_text(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            out += magnitude;
            continue;
        }
        if (!is_unit) out += magnitude + "*";
        out += monomial_text(m, p.nvars());
    }
    return out;
}

} // namespace

QPoly parse_poly(std::string_view text, std::span<const std::string> variables) {
    for (const auto& v : variables)
        if (v.size() != 2 || v[0] != 'x' || !std::isdigit(static_cast<unsigned char>(v[1])))
            throw DomainError("variable names must be 'x' followed by one digit, got '" + v + "'");
    return Parser(text, variables).parse();
}

QPoly parse_poly(std::string_view text, std::size_t nvars) {
    if (nvars > 9) throw DomainError("at most 9 variables are addressable as x1..x9");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return parse_poly(text, names);
}

std::string to_string(const QPoly& p) {
    return render(p, [](const Rational& c) {
        const Rational mag = abs(c);
        return std::tuple{sgn(c) < 0, fanocfg::to_string(mag), mag == 1};
    });
}

std::string to_string(const CycloPoly& p) {
    if (auto q = try_rationalize(p)) return to_string(*q);
    return render(p, [](const CycloElem& c) {
        return std::tuple{false, "(" + c.to_string() + ")", false};
    });
}

} // namespace fanocfg
