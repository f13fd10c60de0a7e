#include "fanocfg/lattice.hpp"

#include "fanocfg/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace fanocfg {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            if (!best || abs(a(i, j)) < best_abs) {
                best = {i, j};
                best_abs = abs(a(i, j));
                if (best_abs == 1) return best;
            }
        }
    return best;
}

} // namespace

GramMatrix::GramMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DomainError("Gram matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i + 1; j < m_.cols(); ++j)
            if (m_(i, j) != m_(j, i)) throw DomainError("Gram matrix must be symmetric");
}

SNFResult snf(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows(), Integer(1));
    IntMatrix v = IntMatrix::identity(m.cols(), Integer(1));
    SNFResult out;
    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        bool finished = false;
        while (true) {
            const auto pivot = smallest_entry(a, t);
            if (!pivot) {
                finished = true;
                break;
            }
            swap_rows(a, t, pivot->first);
            swap_rows(u, t, pivot->first);
            swap_cols(a, t, pivot->second);
            swap_cols(v, t, pivot->second);
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                sub_row(a, i, t, q);
                sub_row(u, i, t, q);
                clean = clean && a(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                sub_col(a, j, t, q);
                sub_col(v, j, t, q);
                clean = clean && a(t, j) == 0;
            }
            if (!clean) continue;
            // Divisibility chain: fold a row with a non-multiple into the pivot row.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t()) == 0) {
                        offender = i;
                        break;
                    }
            if (!offender) break;
            sub_row(a, t, *offender, Integer(-1));
            sub_row(u, t, *offender, Integer(-1));
        }
        if (finished) break;
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
        out.factors.push_back(a(t, t));
    }
    out.rank = out.factors.size();
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

RankSignature rank_and_signature(const GramMatrix& g) {
    const std::size_t n = g.size();
    RatMatrix a = to_rational(g.matrix());
    RankSignature out;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a(i, i)) == 0) {
            std::size_t j = i + 1;
            while (j < n && sgn(a(j, j)) == 0) ++j;
            if (j < n) {
                for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
                for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
            } else {
                j = i + 1;
                while (j < n && sgn(a(i, j)) == 0) ++j;
                if (j == n) continue;  // row i is zero
                // x_i += x_j: the new diagonal is 2 a(i, j) since both diagonals vanish
                for (std::size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
                for (std::size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
            }
        }
        const Rational pivot = a(i, i);
        for (std::size_t k = i + 1; k < n; ++k) {
            if (sgn(a(k, i)) == 0) continue;
            const Rational f = a(k, i) / pivot;
            for (std::size_t c = i; c < n; ++c)
                if (sgn(a(i, c)) != 0) a(k, c) -= f * a(i, c);
            for (std::size_t r = i; r < n; ++r)
                if (sgn(a(r, i)) != 0) a(r, k) -= f * a(r, i);
        }
        if (sgn(pivot) > 0) ++out.signature.positive;
        else ++out.signature.negative;
    }
    out.rank = out.signature.positive + out.signature.negative;
    out.signature.zero = n - out.rank;
    return out;
}

RadicalQuotient radical_quotient(const GramMatrix& g) {
    const std::size_t n = g.size();
    const SNFResult s = snf(g.matrix());
    const std::size_t r = s.rank;
    IntMatrix basis(r, n, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = s.V(j, i);
    RadicalQuotient out;
    if (r == 0) return out;
    out.basis = basis;
    out.gram = GramMatrix(basis * g.matrix() * basis.transpose());
    return out;
}

Integer discriminant(const GramMatrix& g) {
    const auto q = radical_quotient(g);
    if (q.rank() == 0) return 1;
    return determinant(q.gram.matrix());
}

LatticeInvariants lattice_invariants(const GramMatrix& g) {
    const auto rs = rank_and_signature(g);
    LatticeInvariants out{rs.rank, rs.signature, discriminant(g)};
    const int expected = rs.signature.negative % 2 == 0 ? 1 : -1;
    if (sgn(out.discriminant) != expected)
        throw InvariantViolation("discriminant sign disagrees with the signature");
    return out;
}

GramMatrix adjoin_class(const GramMatrix& g, std::span<const Integer> v, const Integer& w) {
    const std::size_t n = g.size();
    if (v.size() != n) throw DomainError("adjoin_class: pairing vector has the wrong length");
    IntMatrix m(n + 1, n + 1, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g(i, j);
        m(i, n) = v[i];
        m(n, i) = v[i];
    }
    m(n, n) = w;
    return GramMatrix(std::move(m));
}

Integer sublattice_index(const GramMatrix& small, const GramMatrix& big) {
    const auto a = radical_quotient(small);
    const auto b = radical_quotient(big);
    if (a.rank() != b.rank()) throw DomainError("sublattice_index: ranks differ");
    const Integer ds = abs(a.rank() == 0 ? Integer(1) : determinant(a.gram.matrix()));
    const Integer db = abs(b.rank() == 0 ? Integer(1) : determinant(b.gram.matrix()));
    if (mpz_divisible_p(ds.get_mpz_t(), db.get_mpz_t()) == 0)
        throw DomainError("sublattice_index: discriminant ratio is not an integer");
    const Integer ratio = ds / db;
    if (mpz_perfect_square_p(ratio.get_mpz_t()) == 0)
        throw DomainError("sublattice_index: discriminant ratio is not a square");
    Integer root;
    mpz_sqrt(root.get_mpz_t(), ratio.get_mpz_t());
    return root;
}

Integer evaluate_form(const GramMatrix& g, std::span<const Integer> c) {
    if (c.size() != g.size()) throw DomainError("evaluate_form: vector has the wrong length");
    Integer acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < c.size(); ++j) acc += c[i] * g(i, j) * c[j];
    }
    return acc;
}

GramMatrix half_scale(const GramMatrix& g) {
    IntMatrix m = g.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (mpz_even_p(m(i, j).get_mpz_t()) == 0)
                throw DomainError("half_scale: odd entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            m(i, j) /= 2;
        }
    return GramMatrix(std::move(m));
}

} // namespace fanocfg
