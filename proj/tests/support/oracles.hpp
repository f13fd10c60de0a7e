#pragma once

// Reference computations that share no code with the library algorithms
// they check: plain complex floating point, permutation-expansion
// determinants, Jacobi eigenvalues, brute-force finite-field searches.

#include "fanocfg/cyclotomic.hpp"
#include "fanocfg/matrix.hpp"
#include "fanocfg/mpoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline cplx root_of_unity(unsigned m, long k) {
    const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
    return {std::cos(t), std::sin(t)};
}

/// The embedding zeta_m -> exp(2 pi i / m).
inline cplx embed(const fanocfg::CycloElem& x) {
    cplx acc = 0;
    const auto c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k].get_d() * root_of_unity(x.conductor(), static_cast<long>(k));
    return acc;
}

inline cplx eval_complex(const fanocfg::QPoly& p, const std::vector<cplx>& x) {
    cplx acc = 0;
    for (const auto& [m, c] : p.terms()) {
        cplx t = c.get_d();
        for (std::size_t i = 0; i < p.nvars(); ++i) t *= std::pow(x[i], static_cast<int>(m.exp[i]));
        acc += t;
    }
    return acc;
}

inline cplx eval_complex(const fanocfg::CycloPoly& p, const std::vector<cplx>& x) {
    cplx acc = 0;
    for (const auto& [m, c] : p.terms()) {
        cplx t = embed(c);
        for (std::size_t i = 0; i < p.nvars(); ++i) t *= std::pow(x[i], static_cast<int>(m.exp[i]));
        acc += t;
    }
    return acc;
}

/// Leibniz expansion; fine up to 7x7.
inline fanocfg::Integer leibniz_det(const fanocfg::IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    fanocfg::Integer total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        fanocfg::Integer t = sign;
        for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
        total += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Eigenvalues of a small real symmetric matrix (cyclic Jacobi).
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-22) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(a[i][i]);
    return out;
}

/// Plain 2x2 matrices over F_11 modulo +-1, enumerated without any of the
/// library's canonicalisation.
struct Psl2Census {
    std::size_t order = 0;
    std::size_t involutions = 0;
    std::array<std::size_t, 13> pair_orders{};
    std::array<std::size_t, 13> element_orders{};
};

inline Psl2Census psl2_11_census() {
    using M = std::array<int, 4>;
    const int p = 11;
    auto mul = [p](const M& x, const M& y) {
        return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                 (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
    };
    auto is_pm_identity = [p](const M& x) {
        return (x[0] == 1 && x[1] == 0 && x[2] == 0 && x[3] == 1) ||
               (x[0] == p - 1 && x[1] == 0 && x[2] == 0 && x[3] == p - 1);
    };
    auto order_of = [&](const M& x) {
        M y = x;
        std::size_t k = 1;
        while (!is_pm_identity(y)) {
            y = mul(y, x);
            ++k;
        }
        return k;
    };
    std::vector<M> sl2;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p == 1) sl2.push_back({a, b, c, d});
    Psl2Census out;
    out.order = sl2.size() / 2;
    std::vector<M> invs;
    for (const auto& x : sl2) {
        const std::size_t o = order_of(x);
        ++out.element_orders[o];
        if (o == 2) invs.push_back(x);
    }
    // each PSL2 element appears twice in SL2
    for (auto& c : out.element_orders) c /= 2;
    std::vector<M> reps;
    for (const auto& x : invs) {
        const M neg{(p - x[0]) % p, (p - x[1]) % p, (p - x[2]) % p, (p - x[3]) % p};
        if (std::find(reps.begin(), reps.end(), neg) == reps.end()) reps.push_back(x);
    }
    out.involutions = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) ++out.pair_orders[order_of(mul(reps[i], reps[j]))];
    return out;
}

/// Smallest prime field search for a nonzero common zero of integer
/// polynomials (coefficients must have denominators prime to p).
inline bool has_fp_projective_zero(const std::vector<fanocfg::QPoly>& polys, long p) {
    const std::size_t n = polys.front().nvars();
    auto red = [p](const fanocfg::Rational& q) {
        fanocfg::Integer num = q.get_num() % p;
        fanocfg::Integer den = q.get_den() % p;
        long a = num.get_si(), b = den.get_si();
        a = ((a % p) + p) % p;
        // b^(p-2) mod p
        long inv = 1, base = ((b % p) + p) % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return a * inv % p;
    };
    std::vector<std::vector<std::pair<std::vector<unsigned>, long>>> reduced;
    for (const auto& f : polys) {
        std::vector<std::pair<std::vector<unsigned>, long>> terms;
        for (const auto& [m, c] : f.terms()) terms.push_back({std::vector<unsigned>(m.exp.begin(), m.exp.begin() + n), red(c)});
        reduced.push_back(std::move(terms));
    }
    std::vector<long> x(n, 0);
    long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (long idx = 1; idx < total; ++idx) {
        long v = idx;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = v % p;
            v /= p;
        }
        bool all_zero = true;
        for (const auto& f : reduced) {
            long acc = 0;
            for (const auto& [e, c] : f) {
                long t = c;
                for (std::size_t i = 0; i < n; ++i)
                    for (unsigned k = 0; k < e[i]; ++k) t = t * x[i] % p;
                acc = (acc + t) % p;
            }
            if (acc != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return true;
    }
    return false;
}

/// Random polynomial with small integer coefficients; homogeneous of the
/// given degree when `homogeneous`.
inline fanocfg::QPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned degree, std::size_t terms,
                                  bool homogeneous, int coeff_bound = 5) {
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    std::uniform_int_distribution<unsigned> deg(0, degree);
    fanocfg::QPoly p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
        fanocfg::Monomial m;
        const unsigned d = homogeneous ? degree : deg(rng);
        for (unsigned k = 0; k < d; ++k) ++m.exp[var(rng)];
        p.add_term(m, fanocfg::Rational(coeff(rng)));
    }
    return p;
}

} // namespace oracle
