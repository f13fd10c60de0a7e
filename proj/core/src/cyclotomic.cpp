#include "fanocfg/cyclotomic.hpp"

#include "fanocfg/errors.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace fanocfg {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void trim(IntPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    IntPolynomial out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// Exact quotient of num by a monic divisor; throws if the remainder is not zero.
IntPolynomial exact_divide_monic(IntPolynomial num, const IntPolynomial& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw InvariantViolation("cyclotomic division degree");
    IntPolynomial quot(num.size() - dd, Integer(0));
    for (std::size_t k = num.size(); k-- > dd;) {
        const Integer t = num[k];
        if (t == 0) continue;
        quot[k - dd] = t;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= t * den[i];
    }
    trim(num);
    if (!num.empty()) throw InvariantViolation("cyclotomic division left a remainder");
    return quot;
}

IntPolynomial compute_cyclotomic(unsigned m) {
    IntPolynomial num(m + 1, Integer(0));
    num[0] = -1;
    num[m] = 1;
    IntPolynomial den{Integer(1)};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) den = multiply(den, cyclotomic_polynomial(d));
    return exact_divide_monic(std::move(num), den);
}

// Reduce a coefficient vector of any length modulo the monic Phi_m in place.
void reduce_mod(RatPoly& r, const IntPolynomial& phi) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = r.size(); k-- > deg;) {
        if (sgn(r[k]) == 0) continue;
        const Rational t = r[k];
        for (std::size_t i = 0; i <= deg; ++i) r[k - deg + i] -= t * phi[i];
    }
    r.resize(deg, Rational(0));
}

// Quotient and remainder over Q; b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {RatPoly{}, a};
    RatPoly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const std::size_t k = shift + b.size() - 1;
        if (sgn(a[k]) == 0) continue;
        const Rational t = a[k] / lead;
        q[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= t * b[i];
    }
    trim(a);
    trim(q);
    return {q, a};
}

RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
    RatPoly out = a;
    if (!q.empty() && !b.empty()) {
        out.resize(std::max(out.size(), q.size() + b.size() - 1), Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

} // namespace

unsigned euler_phi(unsigned m) {
    if (m == 0) throw DomainError("conductor must be positive");
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const IntPolynomial& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw DomainError("cyclotomic_polynomial: m must be >= 1");
    static std::recursive_mutex mutex;
    static std::map<unsigned, std::unique_ptr<IntPolynomial>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
    auto value = std::make_unique<IntPolynomial>(
        m == 1 ? IntPolynomial{Integer(-1), Integer(1)} : compute_cyclotomic(m));
    return *cache.emplace(m, std::move(value)).first->second;
}

CycloElem::CycloElem() : CycloElem(1) {}

CycloElem::CycloElem(unsigned conductor)
    : m_(conductor), c_(euler_phi(conductor), Rational(0)) {}

CycloElem::CycloElem(unsigned conductor, const Rational& value) : CycloElem(conductor) {
    c_[0] = value;
}

CycloElem::CycloElem(unsigned conductor, std::span<const Rational> powers_of_zeta)
    : m_(conductor), c_(powers_of_zeta.begin(), powers_of_zeta.end()) {
    reduce_mod(c_, cyclotomic_polynomial(m_));
}

CycloElem CycloElem::zeta_power(unsigned conductor, long k) {
    const long m = static_cast<long>(conductor);
    const long e = ((k % m) + m) % m;
    RatPoly v(static_cast<std::size_t>(e) + 1, Rational(0));
    v[static_cast<std::size_t>(e)] = 1;
    return CycloElem(conductor, std::span<const Rational>(v));
}

bool CycloElem::is_zero() const noexcept {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool CycloElem::is_rational() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational CycloElem::to_rational() const {
    if (!is_rational()) throw DomainError("cyclotomic element " + to_string() + " is not rational");
    return c_[0];
}

void CycloElem::require_same_field(const CycloElem& o) const {
    if (m_ != o.m_)
        throw DomainError("conductor mismatch: Q(zeta_" + std::to_string(m_) + ") vs Q(zeta_" +
                          std::to_string(o.m_) + ")");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    require_same_field(o);
    const std::size_t n = c_.size();
    if (is_rational() || o.is_rational()) {
        const bool self_rational = is_rational();
        const Rational s = self_rational ? c_[0] : o.c_[0];
        if (self_rational) c_ = o.c_;
        for (auto& q : c_) q *= s;
        return *this;
    }
    RatPoly prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    reduce_mod(prod, cyclotomic_polynomial(m_));
    c_ = std::move(prod);
    return *this;
}

CycloElem& CycloElem::operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
}

CycloElem CycloElem::operator-() const {
    CycloElem out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw DomainError("inversion of zero in Q(zeta_" + std::to_string(m_) + ")");
    if (is_rational()) return CycloElem(m_, Rational(1) / c_[0]);
    // Extended Euclid on (Phi_m, a): track s with s*a == r (mod Phi_m).
    const IntPolynomial& phi = cyclotomic_polynomial(m_);
    RatPoly r0(phi.begin(), phi.end());
    RatPoly r1 = c_;
    trim(r1);
    RatPoly s0;            // coefficient of a for r0
    RatPoly s1{Rational(1)};  // coefficient of a for r1
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = poly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw InvariantViolation("Phi_m shares a factor with a nonzero element");
    for (auto& q : s1) q /= r1[0];
    return CycloElem(m_, std::span<const Rational>(s1));
}

CycloElem CycloElem::galois(long j) const {
    const long m = static_cast<long>(m_);
    const long jj = ((j % m) + m) % m;
    if (std::gcd(jj, m) != 1 && m > 1)
        throw DomainError("galois exponent must be prime to the conductor");
    RatPoly v(m_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[(static_cast<long>(i) * jj) % m] += c_[i];
    return CycloElem(m_, std::span<const Rational>(v));
}

std::string CycloElem::to_string() const {
    if (is_rational()) return fanocfg::to_string(c_[0]);
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& q = c_[k];
        if (sgn(q) == 0) continue;
        const bool negative = sgn(q) < 0;
        const Rational mag = abs(q);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += fanocfg::to_string(mag);
            continue;
        }
        if (mag != 1) out += fanocfg::to_string(mag) + "*";
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::size_t CycloElem::hash() const noexcept {
    std::size_t h = std::hash<unsigned>{}(m_);
    for (const auto& q : c_) {
        const std::size_t hq = std::hash<std::string>{}(fanocfg::to_string(q));
        h ^= hq + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

CycloElem cos_2pi(unsigned conductor, long k, unsigned n) {
    if (n == 0 || conductor % n != 0) throw DomainError("cos_2pi: n must divide the conductor");
    const long step = static_cast<long>(conductor / n);
    CycloElem out = CycloElem::zeta_power(conductor, k * step) +
                    CycloElem::zeta_power(conductor, -k * step);
    return out * Rational(1, 2);
}

CycloElem sin_2pi(unsigned conductor, long k, unsigned n) {
    if (conductor % 4 != 0) throw DomainError("sin_2pi needs i in the field (4 | conductor)");
    if (n == 0 || conductor % n != 0) throw DomainError("sin_2pi: n must divide the conductor");
    const long step = static_cast<long>(conductor / n);
    const CycloElem i = CycloElem::zeta_power(conductor, static_cast<long>(conductor / 4));
    CycloElem diff = CycloElem::zeta_power(conductor, k * step) -
                     CycloElem::zeta_power(conductor, -k * step);
    // (z - z^-1) / (2i) = -(i/2)(z - z^-1)
    return -(i * diff) * Rational(1, 2);
}

} // namespace fanocfg
