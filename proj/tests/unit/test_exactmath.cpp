#include "doctest.h"

#include "fanocfg/cyclotomic.hpp"
#include "fanocfg/errors.hpp"
#include "fanocfg/rational.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace fanocfg;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 12);
    return make_rational(num(rng), den(rng));
}

CycloElem random_cyclo(std::mt19937_64& rng, unsigned m) {
    std::vector<Rational> c;
    for (unsigned i = 0; i < m; ++i) c.push_back(random_rational(rng));
    return CycloElem(m, std::span<const Rational>(c));
}

// Schoolbook product of integer polynomials, independent of the library.
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(to_string(Rational(5, 3)) == "5/3");
    CHECK(to_string(Rational(-4)) == "-4");
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!is_zero(a)) CHECK(a * (Rational(1) / a) == Rational(1));
    }
}

TEST_CASE("factorisation multiplies back") {
    const Integer n("103749698404");
    const auto f = factor_integer(n);
    CHECK(f.at(Integer(2)) == 2);
    CHECK(f.at(Integer(11)) == 10);
    CHECK(multiply_factors(f) == n);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(1, 1000000000L);
    for (int i = 0; i < 50; ++i) {
        const Integer x = dist(rng);
        CHECK(multiply_factors(factor_integer(x)) == x);
    }
}

TEST_CASE("cyclotomic polynomials divide x^m - 1 and have degree phi(m)") {
    for (unsigned m = 1; m <= 30; ++m) {
        // x^m - 1 == prod_{d | m} Phi_d, multiplied out naively
        IntPolynomial prod{Integer(1)};
        unsigned degree_sum = 0;
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            prod = poly_mul(prod, cyclotomic_polynomial(d));
            degree_sum += euler_phi(d);
        }
        IntPolynomial target(m + 1, Integer(0));
        target[0] = -1;
        target[m] = 1;
        CHECK(prod == target);
        CHECK(degree_sum == m);
        CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
    CHECK(cyclotomic_polynomial(11) == IntPolynomial(11, Integer(1)));
}

TEST_CASE("cyclotomic inverse for conductors up to 24") {
    std::mt19937_64 rng(11);
    for (unsigned m = 1; m <= 24; ++m) {
        for (int trial = 0; trial < 5; ++trial) {
            const CycloElem a = random_cyclo(rng, m);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == CycloElem::one(m));
        }
    }
    CHECK_THROWS_AS(CycloElem(5).inverse(), DomainError);
}

TEST_CASE("cyclotomic arithmetic agrees with the complex embedding") {
    std::mt19937_64 rng(19);
    for (unsigned m : {3u, 4u, 5u, 8u, 11u, 12u, 20u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const CycloElem a = random_cyclo(rng, m), b = random_cyclo(rng, m);
            CHECK(std::abs(oracle::embed(a * b) - oracle::embed(a) * oracle::embed(b)) < 1e-8);
            CHECK(std::abs(oracle::embed(a + b) - (oracle::embed(a) + oracle::embed(b))) < 1e-8);
            // galois(j) sends zeta to zeta^j
            const std::vector<Rational> lin{Rational(0), Rational(1)};
            if (std::gcd(3u, m) == 1) {
                CHECK(CycloElem(m, std::span<const Rational>(lin)).galois(3) == CycloElem::zeta_power(m, 3));
            }
        }
    }
}

TEST_CASE("cos and sin of rational angles") {
    for (unsigned n : {3u, 5u, 6u, 8u}) {
        const unsigned m = std::lcm(4u, n);
        for (long k = 0; k < static_cast<long>(n); ++k) {
            const double t = 2 * M_PI * static_cast<double>(k) / n;
            CHECK(std::abs(oracle::embed(cos_2pi(m, k, n)) - std::cos(t)) < 1e-10);
            CHECK(std::abs(oracle::embed(sin_2pi(m, k, n)) - std::sin(t)) < 1e-10);
            const CycloElem c = cos_2pi(m, k, n), s = sin_2pi(m, k, n);
            CHECK(c * c + s * s == CycloElem::one(m));
        }
    }
}

TEST_CASE("mixed conductors are rejected") {
    CHECK_THROWS_AS(CycloElem::one(3) + CycloElem::one(5), DomainError);
}

TEST_CASE("order-11 Gauss period") {
    CycloElem t(11);
    for (long r : {1, 3, 4, 5, 9}) t += CycloElem::zeta_power(11, r);
    CHECK(t * t + t + CycloElem(11, Rational(3)) == CycloElem(11));
    CHECK(t.galois(2) == -t - CycloElem::one(11));
}
