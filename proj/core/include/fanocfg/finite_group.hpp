#pragma once

#include "fanocfg/cyclotomic.hpp"
#include "fanocfg/matrix.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fanocfg {

/// Element of PSL2(F_11): a 2x2 matrix of determinant 1 mod 11, stored as
/// the representative of {M, -M} whose first nonzero entry is in 1..5.
class PSL2Element {
public:
    static constexpr int kPrime = 11;

    /// Any integer entries with ad - bc = 1 mod 11; throws DomainError
    /// otherwise.
    PSL2Element(int a, int b, int c, int d);

    static PSL2Element identity() { return {1, 0, 0, 1}; }

    int a() const noexcept { return e_[0]; }
    int b() const noexcept { return e_[1]; }
    int c() const noexcept { return e_[2]; }
    int d() const noexcept { return e_[3]; }

    friend PSL2Element operator*(const PSL2Element& x, const PSL2Element& y);
    friend auto operator<=>(const PSL2Element&, const PSL2Element&) = default;

    std::string to_string() const;

private:
    std::array<std::uint8_t, 4> e_{};
};

/// All 660 elements in lexicographic order of their canonical entries.
std::vector<PSL2Element> enumerate_psl2_11();

/// A finite group given by its full multiplication table. Elements are
/// dense indices 0..order-1.
class FiniteGroup {
public:
    using Element = std::uint32_t;

    enum class Family { cyclic2, dihedral, psl2, matrix };

    FiniteGroup(std::string name, Family family, unsigned parameter, std::vector<std::string> labels,
                std::vector<Element> table, Element identity, std::vector<Element> generators,
                std::vector<std::string> generator_names);

    const std::string& name() const noexcept { return name_; }
    Family family() const noexcept { return family_; }
    /// n for the dihedral group of order 2n, 0 otherwise.
    unsigned dihedral_n() const noexcept { return family_ == Family::dihedral ? parameter_ : 0; }

    std::size_t order() const noexcept { return labels_.size(); }
    Element identity() const noexcept { return identity_; }
    Element mul(Element g, Element h) const { return table_[g * order() + h]; }
    Element inverse(Element g) const { return inverse_[g]; }
    Element power(Element g, unsigned k) const;
    const std::string& label(Element g) const { return labels_[g]; }

    const std::vector<Element>& generators() const noexcept { return generators_; }
    const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
    /// Shortest word (generator indices, left to right) with product g.
    const std::vector<std::size_t>& word(Element g) const { return words_[g]; }

private:
    std::string name_;
    Family family_;
    unsigned parameter_;
    std::vector<std::string> labels_;
    std::vector<Element> table_;
    Element identity_;
    std::vector<Element> generators_;
    std::vector<std::string> generator_names_;
    std::vector<Element> inverse_;
    std::vector<std::vector<std::size_t>> words_;
};

using Element = FiniteGroup::Element;

/// Group plus the faithful matrices it was closed from.
struct MatrixGroup {
    FiniteGroup group;
    std::vector<Matrix<CycloElem>> matrices;  // indexed by element
};

/// Closes a set of invertible matrices under multiplication. Elements are
/// listed in breadth-first generator-word order, labelled by those words.
MatrixGroup close_matrix_group(std::string name, const std::vector<Matrix<CycloElem>>& generators,
                               const std::vector<std::string>& generator_names, std::size_t max_order = 100000);

/// The A5 generators a = diag(-1,-1,1,1,1) and the order-3 matrix b with
/// half-integer entries, over Q (conductor 1).
std::pair<Matrix<CycloElem>, Matrix<CycloElem>> a5_generator_matrices();

/// Diagonal order-11 symmetry diag(z, z^9, z^3, z^4, z^5) and the 5-cycle
/// permutation fixing the Klein cubic, over Q(zeta_11).
std::pair<Matrix<CycloElem>, Matrix<CycloElem>> klein_generator_matrices();

/// Catalog: "z2", "dN" (N >= 2, or "dihedral" with n), "a5", "psl2_11",
/// "klein55" (order-55 subgroup of the Klein symmetries). Throws
/// DomainError for unknown names.
FiniteGroup enumerate_group(std::string_view name, std::optional<unsigned> n = std::nullopt);

unsigned element_order(const FiniteGroup& g, Element x);

/// g with g^2 = id, g != id, ascending by index.
std::vector<Element> involutions(const FiniteGroup& g);

/// order -> number of unordered pairs {g, h} of distinct elements of invs
/// with o(gh) equal to that order.
std::map<unsigned, std::size_t> pair_order_histogram(const FiniteGroup& g, const std::vector<Element>& invs);

/// order -> number of elements of that order.
std::map<unsigned, std::size_t> element_order_histogram(const FiniteGroup& g);

/// {h x h^-1 : h in conjugators}, ascending.
std::vector<Element> conjugacy_orbit(const FiniteGroup& g, Element x, const std::vector<Element>& conjugators);

/// Subgroup generated by gens, ascending.
std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);

/// A homomorphism to {+1, -1} given by its values on the generators.
struct LinearCharacter {
    std::string name;
    std::vector<int> values;
};

/// T, L (and L1, L2 when n is even) for dihedral groups; T and L for Z/2.
std::vector<LinearCharacter> linear_characters(const FiniteGroup& g);

} // namespace fanocfg
