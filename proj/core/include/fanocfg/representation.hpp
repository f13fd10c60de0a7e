#pragma once

#include "fanocfg/cyclotomic.hpp"
#include "fanocfg/finite_group.hpp"
#include "fanocfg/matrix.hpp"
#include "fanocfg/mpoly.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fanocfg {

/// One irreducible (or one-dimensional) summand of a dihedral or Z/2
/// representation. V is the rotation block V_{k/n}.
struct Summand {
    enum class Kind { V, T, L, L1, L2 };
    Kind kind = Kind::T;
    unsigned k = 0;
    unsigned n = 0;

    unsigned dimension() const noexcept { return kind == Kind::V ? 2 : 1; }
    friend bool operator==(const Summand&, const Summand&) = default;
};

/// Parses "V1/6+V2/6+T", "2V1/3+T", "L+L1+L2+2T". Multiplicities expand
/// into repeated summands in the order written. Throws ParseError.
std::vector<Summand> parse_decomposition(std::string_view text);

/// Canonical text, repeated neighbours folded ("2V1/3+T").
std::string to_string(std::span<const Summand> parts);

/// A matrix for every group element. Dihedral representations live over
/// Q(zeta_m) with m = lcm(4, n); a5 over Q; klein55 over Q(zeta_11).
struct Representation {
    std::string label;
    FiniteGroup group;
    unsigned conductor = 1;
    std::vector<Matrix<CycloElem>> matrices;

    std::size_t dim() const { return matrices.front().rows(); }
    const Matrix<CycloElem>& matrix(Element g) const { return matrices.at(g); }
    std::vector<Matrix<CycloElem>> generator_matrices() const;
};

/// Dihedral group of order 2n acting by the given summands. a acts on V_{k/n}
/// by the rotation [[cos, -sin], [sin, cos]] of angle 2 pi k / n and b by
/// diag(1, -1). Relations and the homomorphism property are verified on
/// the full multiplication table. Requires total dimension 5.
Representation build_dihedral_representation(unsigned n, std::span<const Summand> parts);

/// "d6:V1/6+V2/6+T", "d2:L+L1+L2+2T", "z2:2L+3T", "a5:std", "klein55:std".
/// Throws DomainError on an unknown group or label, or a dimension other
/// than 5; ParseError on malformed text.
Representation build_representation(std::string_view spec);

/// Trace data for one element order. `trace` is the value on the first
/// element of that order; `traces` lists every distinct value (more than
/// one only for Galois-conjugate classes, e.g. the two order-11 classes).
struct TraceRow {
    unsigned order = 0;
    CycloElem trace;
    std::vector<CycloElem> traces;
};

/// Rows by increasing order. Throws InvariantViolation if two elements of
/// the same order have traces that are not Galois conjugate.
std::vector<TraceRow> rep_trace_table(const Representation& rep);

/// Matrix of F -> F(M x) on monomials_of_degree(n, degree); column j holds
/// the coordinates of the j-th monomial after substitution.
Matrix<CycloElem> symmetric_power_matrix(const Matrix<CycloElem>& m, unsigned degree);

/// Sym^3 action F -> F o g on the 35 cubic monomials (degrevlex order).
/// action(g) * action(h) == action(h * g).
Matrix<CycloElem> sym3_action(const Representation& rep, Element g);

/// Coordinates of a homogeneous polynomial on monomials_of_degree.
std::vector<CycloElem> form_coordinates(const CycloPoly& f, unsigned degree, unsigned conductor);
CycloPoly form_from_coordinates(std::span<const CycloElem> coords, std::size_t nvars, unsigned degree);

/// Basis of {F cubic : F o g = chi(g) F for every generator g}; chi is given
/// on the generators. Throws DomainError when chi does not extend to a
/// homomorphism of the group.
std::vector<CycloPoly> eigenspace_cubics(const Representation& rep, std::span<const CycloElem> chi);

/// Convenience overload for +-1 valued characters.
std::vector<CycloPoly> eigenspace_cubics(const Representation& rep, std::span<const int> chi);

} // namespace fanocfg
