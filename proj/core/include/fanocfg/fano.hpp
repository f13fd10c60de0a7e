#pragma once

#include "fanocfg/finite_group.hpp"
#include "fanocfg/groebner.hpp"
#include "fanocfg/lattice.hpp"
#include "fanocfg/mpoly.hpp"
#include "fanocfg/representation.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanocfg {

// ---------------------------------------------------------------- lattices

/// Pairing of two genus-2 classes D_g, D_h: `diag` when g = h, otherwise
/// looked up by the order of gh.
struct IntersectionRule {
    Integer diag = -4;
    std::map<unsigned, Integer> by_order;

    /// Lambda_{x,y,z,w}: x, y, z, w at product orders 2, 3, 5, 6.
    static IntersectionRule lambda(int x, int y, int z, int w, int diag = -4);
    /// The geometric rule, Lambda_{0,2,1,0}.
    static IntersectionRule geometric() { return lambda(0, 2, 1, 0); }
};

/// Gram matrix on involutions(g) in index order. Throws DomainError when
/// some product order has no entry in the rule.
GramMatrix gram_from_group(const FiniteGroup& g, const IntersectionRule& rule);

struct SurveyRecord {
    std::array<int, 4> xyzw{};
    std::size_t rank = 0;
};

/// Rank of Lambda_{x,y,z,w} on the 55 involutions of PSL2(F_11) for every
/// (x, y, z, w) in {0,1,2}^4, in lexicographic order.
std::vector<SurveyRecord> lambda_survey();

struct KleinReport {
    std::size_t rank = 0;
    Signature signature;
    Integer disc_lambda;
    Integer disc_ns;
    Integer index;
    bool incidence_in_lambda = false;
    /// Coordinates of the incidence class on the radical-quotient basis of
    /// the genus-2 lattice (rational; integral iff incidence_in_lambda).
    std::vector<Rational> incidence_coordinates;
};

/// Genus-2 lattice of the Klein cubic's Fano surface and the lattice
/// obtained by adjoining an incidence class (pairings 2, square 5).
KleinReport klein_report();

struct GroupLatticeReport {
    std::string name;
    std::size_t involutions = 0;
    LatticeInvariants invariants;
    /// Square of the sum of all generators.
    Integer all_ones;
    /// d6 only: reflection classes under conjugation by the rotations.
    std::vector<std::vector<Element>> fiber_classes;
    std::vector<Integer> fiber_squares;
    std::optional<Integer> fiber_product;
    /// d6 only: pairings of the central involution's class with each fiber.
    std::vector<Integer> central_pairings;
};

/// name in {z2, d2, d3, d5, d6, a5, psl2_11}, geometric rule.
GroupLatticeReport group_lattice_report(std::string_view name);

struct ScaledLatticeReport {
    std::array<int, 4> xyzw{};
    bool halvable = false;
    std::optional<LatticeInvariants> half;
    LatticeInvariants full;
};

/// Invariants of Lambda_{0,0,0,2} and Lambda_{0,0,2,0} and of their halves.
std::vector<ScaledLatticeReport> conjecture_lattices();

// ------------------------------------------------------- numeric identities

struct NumericIdentityReport {
    Integer CD, D2, R2, CR, genusR;
};

/// Solves C.D, D^2, R^2, C.R and g(R) from C^2 = 5, K = 3C, D.R = 6,
/// g(D) = 2 and C = D + R. Throws InvariantViolation if the system is not
/// uniquely solvable in integers or a relation fails afterwards.
NumericIdentityReport numeric_identities();

// -------------------------------------------------------- line normal form

/// F = C + 2 x4 Q1 + 2 x5 Q2 + x4^2 x1 + 2 x4 x5 ell + x5^2 x3 with C, Q1,
/// Q2, ell forms in x1, x2, x3 (stored with 3 variables).
struct LineNormalForm {
    QPoly C, Q1, Q2, ell;
};

/// Throws DomainError("line not on cubic") or DomainError("cubic not in
/// normal position").
LineNormalForm line_normal_form(const QPoly& cubic);

/// The cubic in x1..x5 described by a normal form.
QPoly reconstruct_cubic(const LineNormalForm& nf);

struct NormalizedCubic {
    QPoly cubic;
    /// The normalized cubic is original(change * x).
    RatMatrix change;
};

/// Moves the line spanned by the rows of `line` (2 x 5) to {x1=x2=x3=0}
/// with x4^2 and x5^2 coefficient forms x1 and x3. x2 is the first
/// coordinate of the moved frame independent of those two.
NormalizedCubic normalize_line_coords(const QPoly& cubic, const RatMatrix& line);

/// (x1 x3 - ell^2) C - Q1^2 x3 + 2 Q1 Q2 ell - Q2^2 x1, in 3 variables.
QPoly gamma_quintic(const LineNormalForm& nf);

/// Q1 = Q2 = 0. When true, also checks that (x4, x5) -> (-x4, -x5) fixes
/// the reconstructed cubic.
bool harmonic_inversion_test(const LineNormalForm& nf);

enum class Genus2Kind { smooth_genus_2, sum_of_two_elliptic };
const char* to_string(Genus2Kind k);

/// Symmetric 3x3 matrix of the conic x1 x3 - ell^2.
RatMatrix conic_matrix(const LineNormalForm& nf);

/// Rank 3 conic -> smooth genus 2 curve. Requires the harmonic inversion.
Genus2Kind genus2_classification(const LineNormalForm& nf);

// --------------------------------------------------------- invariant cubics

/// Representation used for each family: d2 L+L1+L2+2T, d3 2V1/3+T,
/// d5 V1/5+V2/5+T, d6 V1/6+V2/6+T, a5 the half-integer matrices.
std::string family_representation(std::string_view name);

/// Coefficient polynomials of the displayed invariant family (texts).
std::vector<std::string> family_polynomials(std::string_view name);

struct FamilyReport {
    std::string name;
    std::string representation;
    std::size_t dimension = 0;
    std::vector<std::string> polynomials;
    std::vector<bool> member;
    bool all_member = false;
};

FamilyReport family_membership_check(std::string_view name);

/// The trivial-character eigenspace of the family's representation, with
/// rational coefficients.
std::vector<QPoly> family_basis(std::string_view name);

/// True iff f is a linear combination of the basis polynomials.
bool in_span(const std::vector<CycloPoly>& basis, const CycloPoly& f);

QPoly klein_cubic();
QPoly fermat_cubic();

struct SmoothnessReport {
    std::string name;
    bool smooth_found = false;
    std::size_t attempts = 0;
    std::vector<Integer> parameters;
    std::string cubic;
};

/// Seeded search for a smooth member of the trivial-character family
/// (parameters uniform in [-5, 5]). "klein" checks the Klein cubic.
SmoothnessReport smoothness_scan(std::string_view name, std::uint64_t seed, std::size_t max_attempts = 20);

// ------------------------------------------------------------ order-8 scan

struct CharacterScan {
    std::string character;
    std::size_t dimension = 0;
    bool base_singular_point_found = false;
    /// Coordinates (0-based) spanning a coordinate subspace on which every
    /// member is singular somewhere; empty when no such subspace was found.
    std::vector<std::size_t> singular_subspace;
    std::size_t samples = 0;
    bool sampled_members_all_singular = true;
    bool smooth_found = false;
};

struct D4Case {
    std::string decomposition;
    int trace_a = 0;
    int trace_a2 = 0;
    std::vector<CharacterScan> characters;
};

struct ContainmentRecord {
    unsigned order = 0;
    bool contains_d4 = false;
};

struct D4ScanReport {
    std::vector<D4Case> cases;
    std::vector<ContainmentRecord> containment;
    SmoothnessReport control;
    bool no_smooth_cubic = false;
};

/// Decompositions of the order-8 dihedral group with reflections of trace 1,
/// as canonical texts together with (Tr a, Tr a^2).
struct D4Decomposition {
    std::vector<Summand> parts;
    int trace_a = 0;
    int trace_a2 = 0;
};
std::vector<D4Decomposition> d4_decompositions();

/// Second-tier certificate that every member of span(basis) is singular.
/// Looks for coordinates S such that every member vanishes on
/// P = {x_k = 0, k not in S} and at most dim P of the partials are not
/// identically zero on P; those partials then share a zero on P. Returns S
/// (ascending) or nullopt.
std::optional<std::vector<std::size_t>> singular_subspace_certificate(const std::vector<QPoly>& basis);

/// Scans V_chi for every decomposition and linear character. Members are
/// certified singular through a common singular point of the whole space,
/// then through singular_subspace_certificate; otherwise `samples` seeded
/// members are tested.
D4ScanReport d4_nonexistence_scan(std::uint64_t seed = 1, std::size_t samples = 8);

} // namespace fanocfg
