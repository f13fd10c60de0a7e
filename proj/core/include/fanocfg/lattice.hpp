#pragma once

#include "fanocfg/matrix.hpp"
#include "fanocfg/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fanocfg {

/// Symmetric integer matrix: the pairings of a generating set of a lattice.
class GramMatrix {
public:
    GramMatrix() = default;
    /// Throws DomainError unless m is square and symmetric.
    explicit GramMatrix(IntMatrix m);

    std::size_t size() const noexcept { return m_.rows(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const noexcept { return m_; }

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    IntMatrix m_;
};

/// U * M * V = diag(factors..., 0, ...) with U, V unimodular and
/// factors[i] | factors[i + 1], all positive.
struct SNFResult {
    std::vector<Integer> factors;
    std::size_t rank = 0;
    IntMatrix U;
    IntMatrix V;
};

/// Smith normal form by smallest-pivot elimination.
SNFResult snf(const IntMatrix& m);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct RankSignature {
    std::size_t rank = 0;
    Signature signature;
};

/// Rank over Q and signature by symmetric congruence diagonalization.
RankSignature rank_and_signature(const GramMatrix& g);

/// Rows of `basis` (rank x N) map to a basis of Z^N modulo the integer
/// radical; `gram` = basis * G * basis^T is nondegenerate.
struct RadicalQuotient {
    IntMatrix basis;
    GramMatrix gram;
    std::size_t rank() const noexcept { return gram.size(); }
};

RadicalQuotient radical_quotient(const GramMatrix& g);

/// Signed determinant of the induced nondegenerate Gram (1 for rank 0).
Integer discriminant(const GramMatrix& g);

struct LatticeInvariants {
    std::size_t rank = 0;
    Signature signature;
    Integer discriminant;
};

/// Rank, signature and discriminant; throws InvariantViolation if the sign
/// of the discriminant is not (-1)^negative.
LatticeInvariants lattice_invariants(const GramMatrix& g);

/// Appends a generator with pairings v and self-intersection w.
GramMatrix adjoin_class(const GramMatrix& g, std::span<const Integer> v, const Integer& w);

/// sqrt(|disc(small)| / |disc(big)|). Throws DomainError on a rank mismatch
/// or when the ratio is not the square of an integer.
Integer sublattice_index(const GramMatrix& small, const GramMatrix& big);

/// c^T G c.
Integer evaluate_form(const GramMatrix& g, std::span<const Integer> c);

/// Entry-wise halving; throws DomainError on an odd entry.
GramMatrix half_scale(const GramMatrix& g);

} // namespace fanocfg
