#pragma once

#include "fanocfg/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fanocfg {

/// Dense univariate polynomial, coefficient of x^i at index i. No trailing
/// zeros; the zero polynomial is the empty vector.
using IntPolynomial = std::vector<Integer>;

unsigned euler_phi(unsigned m);

/// Phi_m, the minimal polynomial over Q of a primitive m-th root of unity.
/// Obtained by exact division of x^m - 1 by Phi_d for the proper divisors d
/// of m. Results are memoised (thread-safe).
const IntPolynomial& cyclotomic_polynomial(unsigned m);

/// An element of Q(zeta_m) stored as the coefficient vector of
/// 1, zeta, ..., zeta^(phi(m)-1), always reduced modulo Phi_m. Two elements
/// are equal iff their conductors and coefficient vectors agree.
///
/// Arithmetic between different conductors throws DomainError: callers pick
/// one conductor (an lcm of what they need) up front.
class CycloElem {
public:
    /// Zero of Q (conductor 1).
    CycloElem();
    /// Zero of Q(zeta_m).
    explicit CycloElem(unsigned conductor);
    CycloElem(unsigned conductor, const Rational& value);
    /// Reduces an arbitrary coefficient sequence in zeta modulo Phi_m.
    CycloElem(unsigned conductor, std::span<const Rational> powers_of_zeta);

    static CycloElem one(unsigned conductor) { return {conductor, Rational(1)}; }
    /// zeta_m^k for any integer k.
    static CycloElem zeta_power(unsigned conductor, long k);

    unsigned conductor() const noexcept { return m_; }
    std::span<const Rational> coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    /// Throws DomainError unless is_rational().
    Rational to_rational() const;

    /// Multiplicative inverse; throws DomainError on zero.
    CycloElem inverse() const;
    /// Image under the automorphism zeta -> zeta^j, gcd(j, m) = 1.
    CycloElem galois(long j) const;

    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    CycloElem& operator/=(const CycloElem& o) { return *this *= o.inverse(); }
    CycloElem& operator*=(const Rational& q);
    CycloElem operator-() const;

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
    friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
    friend CycloElem operator*(CycloElem a, const Rational& q) { return a *= q; }
    friend CycloElem operator*(const Rational& q, CycloElem a) { return a *= q; }
    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }

    /// Rational elements print as rationals; others as a sum in `z`,
    /// e.g. "z^3 - 1/2*z + 2".
    std::string to_string() const;
    std::size_t hash() const noexcept;

private:
    void require_same_field(const CycloElem& o) const;

    unsigned m_;
    std::vector<Rational> c_;
};

inline bool is_zero(const CycloElem& x) { return x.is_zero(); }
inline CycloElem one_like(const CycloElem& x) { return CycloElem::one(x.conductor()); }
inline CycloElem zero_like(const CycloElem& x) { return CycloElem(x.conductor()); }
inline std::string to_string(const CycloElem& x) { return x.to_string(); }

/// (zeta_n^k + zeta_n^-k)/2 = cos(2 pi k / n) inside Q(zeta_m); n | m.
CycloElem cos_2pi(unsigned conductor, long k, unsigned n);
/// sin(2 pi k / n) inside Q(zeta_m); requires 4 | m and n | m.
CycloElem sin_2pi(unsigned conductor, long k, unsigned n);

} // namespace fanocfg
