#pragma once

#include "fanocfg/cyclotomic.hpp"
#include "fanocfg/errors.hpp"
#include "fanocfg/matrix.hpp"
#include "fanocfg/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace fanocfg {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Unused trailing slots stay zero, so comparisons do not
/// need the variable count.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};

    static Monomial variable(std::size_t i, std::uint16_t power = 1) {
        Monomial m;
        m.exp[i] = power;
        return m;
    }

    unsigned degree() const noexcept {
        unsigned d = 0;
        for (auto e : exp) d += e;
        return d;
    }

    bool is_one() const noexcept { return degree() == 0; }

    bool divides(const Monomial& o) const noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }

    /// Single variable index if this is x_i^k (k >= 1).
    std::optional<std::size_t> pure_power_variable() const noexcept {
        std::optional<std::size_t> var;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (exp[i] == 0) continue;
            if (var) return std::nullopt;
            var = i;
        }
        return var;
    }

    friend Monomial operator*(Monomial a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i) a.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
        return a;
    }

    /// Requires b | a.
    friend Monomial operator/(Monomial a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i) a.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
        return a;
    }

    friend Monomial lcm(Monomial a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i) a.exp[i] = std::max(a.exp[i], b.exp[i]);
        return a;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (a.exp[i] != 0 && b.exp[i] != 0) return false;
        return true;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class MonomialOrder { degrevlex, lex };

/// True when a is strictly greater than b in the given order.
inline bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
    if (order == MonomialOrder::lex) return a.exp > b.exp;
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    }
    return false;
}

struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return monomial_greater(a, b, MonomialOrder::degrevlex);
    }
};

/// Sparse polynomial in x1..xn over K. Terms are kept in descending
/// degrevlex order and zero coefficients are never stored.
template <class K>
class MPoly {
public:
    using Terms = std::map<Monomial, K, DegRevLexGreater>;

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {
        if (nvars > kMaxVars) throw DomainError("too many variables");
    }

    static MPoly constant(std::size_t nvars, const K& c) {
        MPoly p(nvars);
        p.add_term(Monomial{}, c);
        return p;
    }

    /// x_{i+1} (0-based index i).
    static MPoly variable(std::size_t nvars, std::size_t i, const K& one) {
        if (i >= nvars) throw DomainError("variable index out of range");
        MPoly p(nvars);
        p.add_term(Monomial::variable(i), one);
        return p;
    }

    static MPoly monomial(std::size_t nvars, const Monomial& m, const K& c) {
        MPoly p(nvars);
        p.add_term(m, c);
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of m, or nullopt when absent.
    std::optional<K> coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        if (it == terms_.end()) return std::nullopt;
        return it->second;
    }

    /// Degree of the leading term; 0 for the zero polynomial.
    unsigned total_degree() const noexcept {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        const unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    bool is_homogeneous_of_degree(unsigned d) const noexcept {
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    void add_term(const Monomial& m, const K& c) {
        if (fanocfg::is_zero(c)) return;
        for (std::size_t i = nvars_; i < kMaxVars; ++i)
            if (m.exp[i] != 0) throw DomainError("monomial uses a variable beyond nvars");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (fanocfg::is_zero(it->second)) terms_.erase(it);
    }

    MPoly& operator+=(const MPoly& o) {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        require_same_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    MPoly operator-() const {
        MPoly out(nvars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.require_same_ring(b);
        MPoly out(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend MPoly operator*(const K& s, const MPoly& p) {
        MPoly out(p.nvars_);
        if (fanocfg::is_zero(s)) return out;
        for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
        return out;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MPoly pow(unsigned e) const {
        if (terms_.empty()) {
            if (e == 0) throw DomainError("0^0 is undefined for polynomials");
            return *this;
        }
        MPoly out = constant(nvars_, one_like(terms_.begin()->second));
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// Partial derivative with respect to x_{var+1}.
    MPoly derivative(std::size_t var) const {
        if (var >= nvars_) throw DomainError("derivative variable out of range");
        MPoly out(nvars_);
        for (const auto& [m, c] : terms_) {
            const auto e = m.exp[var];
            if (e == 0) continue;
            Monomial dm = m;
            dm.exp[var] = static_cast<std::uint16_t>(e - 1);
            out.add_term(dm, c * Rational(e));
        }
        return out;
    }

    K evaluate(std::span<const K> point) const {
        if (point.size() != nvars_) throw DomainError("evaluation point has the wrong length");
        if (terms_.empty()) {
            if (point.empty()) throw DomainError("cannot infer the scalar field of an empty evaluation");
            return zero_like(point.front());
        }
        K acc = zero_like(terms_.begin()->second);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < m.exp[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Same terms over another scalar type.
    template <class F>
    auto map_coefficients(F&& f) const -> MPoly<decltype(f(std::declval<const K&>()))> {
        MPoly<decltype(f(std::declval<const K&>()))> out(nvars_);
        for (const auto& [m, c] : terms_) out.add_term(m, f(c));
        return out;
    }

    /// Reinterprets in a ring with more (or equally many) variables.
    MPoly with_nvars(std::size_t nvars) const {
        MPoly out(nvars);
        for (const auto& [m, c] : terms_) out.add_term(m, c);
        return out;
    }

private:
    void require_same_ring(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw DomainError("polynomials live in rings with different variable counts");
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

using QPoly = MPoly<Rational>;
using CycloPoly = MPoly<CycloElem>;

/// Embeds a rational polynomial into Q(zeta_m)[x].
inline CycloPoly embed(const QPoly& p, unsigned conductor) {
    return p.map_coefficients([conductor](const Rational& q) { return CycloElem(conductor, q); });
}

/// Rational polynomial if every coefficient is rational.
inline std::optional<QPoly> try_rationalize(const CycloPoly& p) {
    QPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_rational()) return std::nullopt;
        out.add_term(m, c.to_rational());
    }
    return out;
}

/// All partial derivatives (d/dx1, ..., d/dxn).
template <class K>
std::vector<MPoly<K>> partials(const MPoly<K>& p) {
    std::vector<MPoly<K>> out;
    out.reserve(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) out.push_back(p.derivative(i));
    return out;
}

/// p(M x): x_i is replaced by sum_j M(i, j) x_j. Contravariant:
/// substitute_linear(substitute_linear(p, A), B) == substitute_linear(p, A * B).
template <class K>
MPoly<K> substitute_linear(const MPoly<K>& p, const Matrix<K>& m) {
    const std::size_t n = p.nvars();
    if (m.rows() != n || m.cols() != n)
        throw DomainError("substitute_linear: matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " but the polynomial has " + std::to_string(n) +
                          " variables");
    MPoly<K> out(n);
    if (p.is_zero()) return out;
    const K one = one_like(p.terms().begin()->second);
    std::vector<MPoly<K>> images;
    for (std::size_t i = 0; i < n; ++i) {
        MPoly<K> form(n);
        for (std::size_t j = 0; j < n; ++j) form.add_term(Monomial::variable(j), m(i, j));
        images.push_back(std::move(form));
    }
    // powers[i][k] = images[i]^k, grown lazily
    std::vector<std::vector<MPoly<K>>> powers(n);
    for (std::size_t i = 0; i < n; ++i) powers[i].push_back(MPoly<K>::constant(n, one));
    for (const auto& [mono, c] : p.terms()) {
        MPoly<K> term = MPoly<K>::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t e = mono.exp[i];
            while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
            if (e > 0) term = term * powers[i][e];
        }
        out += term;
    }
    return out;
}

/// Monomials of the given degree in n variables, in descending degrevlex
/// order. For (5, 3) this is the 35-element cubic basis.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

} // namespace fanocfg
