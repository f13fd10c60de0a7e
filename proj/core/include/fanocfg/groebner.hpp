#pragma once

#include "fanocfg/mpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fanocfg {

namespace detail {

/// Working polynomial for Buchberger: terms sorted ascending in the active
/// order, so the leading term sits at back().
template <class K>
struct SortedPoly {
    std::vector<std::pair<Monomial, K>> terms;

    bool empty() const noexcept { return terms.empty(); }
    const Monomial& lead() const { return terms.back().first; }
    const K& lead_coeff() const { return terms.back().second; }
};

template <class K>
SortedPoly<K> to_sorted(const MPoly<K>& p, MonomialOrder order) {
    SortedPoly<K> out;
    out.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(out.terms.begin(), out.terms.end(), [order](const auto& a, const auto& b) {
        return monomial_greater(b.first, a.first, order);
    });
    return out;
}

template <class K>
MPoly<K> from_sorted(const SortedPoly<K>& p, std::size_t nvars) {
    MPoly<K> out(nvars);
    for (const auto& [m, c] : p.terms) out.add_term(m, c);
    return out;
}

/// a - c * m * b, all ascending.
template <class K>
SortedPoly<K> sub_scaled(const SortedPoly<K>& a, const K& c, const Monomial& m, const SortedPoly<K>& b,
                         MonomialOrder order) {
    SortedPoly<K> out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            out.terms.push_back(a.terms[i++]);
            continue;
        }
        const Monomial mb = m * b.terms[j].first;
        if (i == a.terms.size() || monomial_greater(a.terms[i].first, mb, order)) {
            out.terms.emplace_back(mb, -(c * b.terms[j].second));
            ++j;
        } else if (a.terms[i].first == mb) {
            K v = a.terms[i].second - c * b.terms[j].second;
            if (!is_zero(v)) out.terms.emplace_back(mb, std::move(v));
            ++i;
            ++j;
        } else {
            out.terms.push_back(a.terms[i++]);
        }
    }
    return out;
}

template <class K>
void make_monic(SortedPoly<K>& p) {
    if (p.empty()) return;
    const K inv = one_like(p.lead_coeff()) / p.lead_coeff();
    for (auto& t : p.terms) t.second = t.second * inv;
}

/// Full reduction of f modulo basis (every term, not only the lead).
template <class K>
SortedPoly<K> reduce(SortedPoly<K> f, const std::vector<SortedPoly<K>>& basis, MonomialOrder order,
                     std::size_t skip = static_cast<std::size_t>(-1)) {
    std::vector<std::pair<Monomial, K>> remainder;  // built descending
    while (!f.empty()) {
        const Monomial lm = f.lead();
        const SortedPoly<K>* divisor = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].empty()) continue;
            if (basis[k].lead().divides(lm)) {
                divisor = &basis[k];
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(std::move(f.terms.back()));
            f.terms.pop_back();
            continue;
        }
        const K c = f.lead_coeff() / divisor->lead_coeff();
        f = sub_scaled(f, c, lm / divisor->lead(), *divisor, order);
    }
    std::reverse(remainder.begin(), remainder.end());
    return SortedPoly<K>{std::move(remainder)};
}

template <class K>
SortedPoly<K> s_poly(const SortedPoly<K>& f, const SortedPoly<K>& g, MonomialOrder order) {
    const Monomial l = lcm(f.lead(), g.lead());
    // (l/lm f) * f / lc f - (l/lm g) * g / lc g
    SortedPoly<K> scaled_f;
    const K inv_f = one_like(f.lead_coeff()) / f.lead_coeff();
    const Monomial mf = l / f.lead();
    for (const auto& [m, c] : f.terms) scaled_f.terms.emplace_back(mf * m, c * inv_f);
    const K cg = one_like(g.lead_coeff()) / g.lead_coeff();
    return sub_scaled(scaled_f, cg, l / g.lead(), g, order);
}

} // namespace detail

/// Leading monomial of a nonzero polynomial in the given order.
template <class K>
Monomial leading_monomial(const MPoly<K>& p, MonomialOrder order) {
    if (p.is_zero()) throw DomainError("leading monomial of the zero polynomial");
    if (order == MonomialOrder::degrevlex) return p.terms().begin()->first;
    Monomial best = p.terms().begin()->first;
    for (const auto& [m, c] : p.terms())
        if (monomial_greater(m, best, order)) best = m;
    return best;
}

template <class K>
MPoly<K> s_polynomial(const MPoly<K>& f, const MPoly<K>& g, MonomialOrder order = MonomialOrder::degrevlex) {
    return detail::from_sorted(detail::s_poly(detail::to_sorted(f, order), detail::to_sorted(g, order), order),
                               f.nvars());
}

/// Normal form of f modulo the polynomials in `divisors` (full reduction).
template <class K>
MPoly<K> normal_form(const MPoly<K>& f, std::span<const MPoly<K>> divisors,
                     MonomialOrder order = MonomialOrder::degrevlex) {
    std::vector<detail::SortedPoly<K>> basis;
    for (const auto& g : divisors) basis.push_back(detail::to_sorted(g, order));
    return detail::from_sorted(detail::reduce(detail::to_sorted(f, order), basis, order), f.nvars());
}

/// Reduced Groebner basis (monic, inter-reduced), sorted by ascending
/// leading monomial. Buchberger with the coprime-lead criterion and normal
/// pair selection (smallest lcm first).
template <class K>
std::vector<MPoly<K>> groebner(std::span<const MPoly<K>> generators,
                               MonomialOrder order = MonomialOrder::degrevlex) {
    using detail::SortedPoly;
    std::vector<SortedPoly<K>> basis;
    std::size_t nvars = 0;
    for (const auto& g : generators) {
        if (!basis.empty() && g.nvars() != nvars) throw DomainError("generators over different rings");
        nvars = g.nvars();
        if (g.is_zero()) continue;
        auto s = detail::to_sorted(g, order);
        detail::make_monic(s);
        basis.push_back(std::move(s));
    }
    if (basis.empty()) return {};

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (basis[i].empty()) continue;
            if (coprime(basis[i].lead(), basis[j].lead())) continue;
            pairs.push_back({i, j, lcm(basis[i].lead(), basis[j].lead())});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [order](const Pair& a, const Pair& b) {
            return monomial_greater(b.lcm, a.lcm, order);
        });
        const Pair p = *best;
        pairs.erase(best);
        if (basis[p.i].empty() || basis[p.j].empty()) continue;
        auto h = detail::reduce(detail::s_poly(basis[p.i], basis[p.j], order), basis, order);
        if (h.empty()) continue;
        detail::make_monic(h);
        basis.push_back(std::move(h));
        add_pairs_for(basis.size() - 1);
    }

    // Minimalise: drop elements whose lead is divisible by another lead.
    std::vector<SortedPoly<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i) continue;
            if (!basis[k].lead().divides(basis[i].lead())) continue;
            // equal leads: keep the first occurrence only
            redundant = basis[k].lead() != basis[i].lead() || k < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Inter-reduce.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        minimal[i] = detail::reduce(minimal[i], minimal, order, i);
        detail::make_monic(minimal[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [order](const SortedPoly<K>& a, const SortedPoly<K>& b) {
        return monomial_greater(b.lead(), a.lead(), order);
    });
    std::vector<MPoly<K>> out;
    for (const auto& g : minimal) out.push_back(detail::from_sorted(g, nvars));
    return out;
}

/// True iff the homogeneous generators have no common zero in projective
/// space over the algebraic closure: the degrevlex leading-term ideal must
/// contain a pure power of every variable.
template <class K>
bool projective_empty(std::span<const MPoly<K>> generators) {
    std::size_t nvars = 0;
    for (const auto& g : generators) {
        if (!g.is_homogeneous()) throw DomainError("projective_empty needs homogeneous generators");
        nvars = g.nvars();
    }
    const auto basis = groebner(generators, MonomialOrder::degrevlex);
    if (basis.empty()) return nvars == 0;
    std::vector<bool> has_pure_power(nvars, false);
    for (const auto& g : basis) {
        const Monomial lm = leading_monomial(g, MonomialOrder::degrevlex);
        if (lm.is_one()) return true;
        if (auto v = lm.pure_power_variable()) has_pure_power[*v] = true;
    }
    return std::all_of(has_pure_power.begin(), has_pure_power.end(), [](bool b) { return b; });
}

enum class Smoothness { smooth, singular };

inline const char* to_string(Smoothness s) { return s == Smoothness::smooth ? "smooth" : "singular"; }

/// Jacobian criterion for a cubic hypersurface: smooth iff the partials
/// have no common projective zero. The cubic itself is not adjoined since
/// Euler's identity already puts it in the Jacobian ideal.
template <class K>
Smoothness smooth_cubic(const MPoly<K>& f) {
    if (f.is_zero() || !f.is_homogeneous_of_degree(3))
        throw DomainError("smooth_cubic needs a nonzero homogeneous cubic");
    const auto jac = partials(f);
    return projective_empty(std::span<const MPoly<K>>(jac)) ? Smoothness::smooth : Smoothness::singular;
}

} // namespace fanocfg
