#include "fanocfg/fano.hpp"

#include "fanocfg/errors.hpp"
#include "fanocfg/poly_text.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <random>
#include <set>
#include <thread>

namespace fanocfg {

namespace {

using Monomials = std::vector<Monomial>;

// Product orders o(gh) for all pairs of involutions.
std::vector<std::vector<unsigned>> pair_orders(const FiniteGroup& g, const std::vector<Element>& invs) {
    std::vector<std::vector<unsigned>> out(invs.size(), std::vector<unsigned>(invs.size(), 1));
    for (std::size_t i = 0; i < invs.size(); ++i)
        for (std::size_t j = i + 1; j < invs.size(); ++j) {
            out[i][j] = element_order(g, g.mul(invs[i], invs[j]));
            out[j][i] = out[i][j];
        }
    return out;
}

GramMatrix gram_from_orders(const std::vector<std::vector<unsigned>>& orders, const IntersectionRule& rule) {
    const std::size_t n = orders.size();
    IntMatrix m(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                m(i, j) = rule.diag;
                continue;
            }
            auto it = rule.by_order.find(orders[i][j]);
            if (it == rule.by_order.end())
                throw DomainError("intersection rule has no entry for product order " + std::to_string(orders[i][j]));
            m(i, j) = it->second;
        }
    return GramMatrix(std::move(m));
}

const FiniteGroup& psl2_group() {
    static const FiniteGroup g = enumerate_group("psl2_11");
    return g;
}

const std::vector<std::vector<unsigned>>& psl2_pair_orders() {
    static const auto orders = pair_orders(psl2_group(), involutions(psl2_group()));
    return orders;
}

QPoly restrict_to_plane(const QPoly& p) {
    QPoly out(3);
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 3; i < kMaxVars; ++i)
            if (m.exp[i] != 0) throw InvariantViolation("form depends on x4 or x5");
        out.add_term(m, c);
    }
    return out;
}

std::vector<Integer> ones(std::size_t n) { return std::vector<Integer>(n, Integer(1)); }

} // namespace

// ---------------------------------------------------------------- lattices

IntersectionRule IntersectionRule::lambda(int x, int y, int z, int w, int diag) {
    IntersectionRule r;
    r.diag = diag;
    r.by_order = {{2, Integer(x)}, {3, Integer(y)}, {5, Integer(z)}, {6, Integer(w)}};
    return r;
}

GramMatrix gram_from_group(const FiniteGroup& g, const IntersectionRule& rule) {
    return gram_from_orders(pair_orders(g, involutions(g)), rule);
}

std::vector<SurveyRecord> lambda_survey() {
    const auto& orders = psl2_pair_orders();
    std::vector<std::array<int, 4>> tuples;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (int w = 0; w < 3; ++w) tuples.push_back({x, y, z, w});
    std::vector<SurveyRecord> out(tuples.size());
    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> tasks;
    for (std::size_t wkr = 0; wkr < workers; ++wkr)
        tasks.push_back(std::async(std::launch::async, [&, wkr] {
            for (std::size_t i = wkr; i < tuples.size(); i += workers) {
                const auto& t = tuples[i];
                const auto g = gram_from_orders(orders, IntersectionRule::lambda(t[0], t[1], t[2], t[3]));
                out[i] = {t, rank(to_rational(g.matrix()))};
            }
        }));
    for (auto& t : tasks) t.get();
    return out;
}

KleinReport klein_report() {
    const GramMatrix g = gram_from_orders(psl2_pair_orders(), IntersectionRule::geometric());
    const auto inv = lattice_invariants(g);
    KleinReport out;
    out.rank = inv.rank;
    out.signature = inv.signature;
    out.disc_lambda = inv.discriminant;

    const std::vector<Integer> v(g.size(), Integer(2));
    const GramMatrix ns = adjoin_class(g, v, Integer(5));
    const auto ns_inv = lattice_invariants(ns);
    if (ns_inv.rank != inv.rank) throw InvariantViolation("incidence class raised the rank");
    out.disc_ns = ns_inv.discriminant;
    out.index = sublattice_index(g, ns);

    // Coordinates y of the incidence class c on the quotient basis B of the
    // genus-2 lattice: G' y = B v, then c.c must equal y^T G' y.
    const auto q = radical_quotient(g);
    const RatMatrix gq = to_rational(q.gram.matrix());
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < q.rank(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < g.size(); ++j) s += q.basis(i, j) * v[j];
        rhs.emplace_back(s);
    }
    const auto y = solve(gq, rhs);
    if (!y) throw InvariantViolation("nondegenerate Gram system has no solution");
    Rational self = 0;
    for (std::size_t i = 0; i < y->size(); ++i)
        for (std::size_t j = 0; j < y->size(); ++j) self += (*y)[i] * gq(i, j) * (*y)[j];
    if (self != 5) throw InvariantViolation("incidence class is not in the rational span of the genus-2 lattice");
    out.incidence_coordinates = *y;
    out.incidence_in_lambda = std::all_of(y->begin(), y->end(), [](const Rational& r) { return is_integer(r); });
    return out;
}

GroupLatticeReport group_lattice_report(std::string_view name) {
    static const std::set<std::string_view> supported{"z2", "d2", "d3", "d5", "d6", "a5", "psl2_11"};
    if (supported.count(name) == 0) throw DomainError("group_lattice_report: unsupported group '" + std::string(name) + "'");
    const FiniteGroup g = enumerate_group(name);
    const auto invs = involutions(g);
    const GramMatrix gram = gram_from_group(g, IntersectionRule::geometric());
    GroupLatticeReport out;
    out.name = std::string(name);
    out.involutions = invs.size();
    out.invariants = lattice_invariants(gram);
    out.all_ones = evaluate_form(gram, ones(invs.size()));
    if (name != "d6") return out;

    const unsigned n = g.dihedral_n();
    const std::vector<Element> rotations = generated_subgroup(g, {g.generators()[0]});
    const Element central = g.power(g.generators()[0], n / 2);
    std::set<Element> seen;
    for (Element x : invs) {
        if (x == central || seen.count(x) != 0) continue;
        auto cls = conjugacy_orbit(g, x, rotations);
        seen.insert(cls.begin(), cls.end());
        out.fiber_classes.push_back(std::move(cls));
    }
    auto indicator = [&](const std::vector<Element>& members) {
        std::vector<Integer> c(invs.size(), Integer(0));
        for (std::size_t i = 0; i < invs.size(); ++i)
            if (std::find(members.begin(), members.end(), invs[i]) != members.end()) c[i] = 1;
        return c;
    };
    std::vector<std::vector<Integer>> fibers;
    for (const auto& cls : out.fiber_classes) {
        fibers.push_back(indicator(cls));
        out.fiber_squares.push_back(evaluate_form(gram, fibers.back()));
    }
    if (fibers.size() == 2) {
        // F1.F2 = ((F1+F2)^2 - F1^2 - F2^2) / 2
        std::vector<Integer> sum(invs.size());
        for (std::size_t i = 0; i < invs.size(); ++i) sum[i] = fibers[0][i] + fibers[1][i];
        out.fiber_product = (evaluate_form(gram, sum) - out.fiber_squares[0] - out.fiber_squares[1]) / 2;
    }
    const auto c = std::find(invs.begin(), invs.end(), central) - invs.begin();
    for (const auto& f : fibers) {
        Integer s = 0;
        for (std::size_t i = 0; i < invs.size(); ++i) s += gram(static_cast<std::size_t>(c), i) * f[i];
        out.central_pairings.push_back(s);
    }
    return out;
}

std::vector<ScaledLatticeReport> conjecture_lattices() {
    std::vector<ScaledLatticeReport> out;
    for (const std::array<int, 4> t : {std::array<int, 4>{0, 0, 0, 2}, std::array<int, 4>{0, 0, 2, 0}}) {
        const auto g = gram_from_orders(psl2_pair_orders(), IntersectionRule::lambda(t[0], t[1], t[2], t[3]));
        ScaledLatticeReport r;
        r.xyzw = t;
        r.full = lattice_invariants(g);
        try {
            r.half = lattice_invariants(half_scale(g));
            r.halvable = true;
        } catch (const DomainError&) {
            r.halvable = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ------------------------------------------------------- numeric identities

NumericIdentityReport numeric_identities() {
    // Unknowns (CD, D2, R2, CR, gR). C = D + R, D.R = 6, C^2 = 5, K = 3C.
    const Rational dr = 6;
    const Rational c2 = 5;
    const Rational genus_d = 2;
    auto row = [](std::initializer_list<int> v) {
        std::vector<Rational> r;
        for (int x : v) r.emplace_back(x);
        return r;
    };
    const RatMatrix a = RatMatrix::from_rows({
        row({3, 1, 0, 0, 0}),   // adjunction on D: D^2 + K.D = 2 g(D) - 2
        row({-1, 1, 0, 0, 0}),  // C.D = D^2 + D.R
        row({0, 1, 1, 0, 0}),   // C^2 = D^2 + R^2 + 2 D.R
        row({0, 0, -1, 1, 0}),  // C.R = D.R + R^2
        row({0, 0, -1, -3, 2}), // adjunction on R
    });
    const std::vector<Rational> b{2 * genus_d - 2, -dr, c2 - 2 * dr, dr, Rational(2)};
    if (rank(a) != 5) throw InvariantViolation("identity system is singular");
    const auto x = solve(a, b);
    if (!x) throw InvariantViolation("identity system is inconsistent");
    for (const auto& v : *x)
        if (!is_integer(v)) throw InvariantViolation("identity system has a non-integral solution");
    NumericIdentityReport r{(*x)[0].get_num(), (*x)[1].get_num(), (*x)[2].get_num(), (*x)[3].get_num(),
                            (*x)[4].get_num()};
    if (r.D2 + r.R2 + 2 * 6 != 5 || r.D2 - r.CD != -6 || r.D2 + 3 * r.CD != 2 || r.R2 + 3 * r.CR != 2 * r.genusR - 2)
        throw InvariantViolation("numeric identities fail after solving");
    return r;
}

// -------------------------------------------------------- line normal form

LineNormalForm line_normal_form(const QPoly& cubic) {
    if (cubic.nvars() != 5 || cubic.is_zero() || !cubic.is_homogeneous_of_degree(3))
        throw DomainError("line_normal_form needs a nonzero cubic in x1..x5");
    QPoly parts[3][3] = {{QPoly(5), QPoly(5), QPoly(5)}, {QPoly(5), QPoly(5), QPoly(5)}, {QPoly(5), QPoly(5), QPoly(5)}};
    for (const auto& [m, c] : cubic.terms()) {
        const unsigned e4 = m.exp[3];
        const unsigned e5 = m.exp[4];
        if (e4 + e5 == 3) throw DomainError("line not on cubic");
        Monomial rest = m;
        rest.exp[3] = 0;
        rest.exp[4] = 0;
        parts[e4][e5].add_term(rest, c);
    }
    const QPoly x1 = QPoly::variable(5, 0, Rational(1));
    const QPoly x3 = QPoly::variable(5, 2, Rational(1));
    if (!(parts[2][0] == x1) || !(parts[0][2] == x3)) throw DomainError("cubic not in normal position");
    const Rational half(1, 2);
    LineNormalForm nf;
    nf.C = restrict_to_plane(parts[0][0]);
    nf.Q1 = restrict_to_plane(half * parts[1][0]);
    nf.Q2 = restrict_to_plane(half * parts[0][1]);
    nf.ell = restrict_to_plane(half * parts[1][1]);
    return nf;
}

QPoly reconstruct_cubic(const LineNormalForm& nf) {
    auto x = [](std::size_t i) { return QPoly::variable(5, i, Rational(1)); };
    const Rational two = 2;
    const QPoly c = nf.C.with_nvars(5);
    const QPoly q1 = nf.Q1.with_nvars(5);
    const QPoly q2 = nf.Q2.with_nvars(5);
    const QPoly l = nf.ell.with_nvars(5);
    return c + two * (x(3) * q1) + two * (x(4) * q2) + x(3) * x(3) * x(0) + two * (x(3) * x(4) * l) +
           x(4) * x(4) * x(2);
}

NormalizedCubic normalize_line_coords(const QPoly& cubic, const RatMatrix& line) {
    if (cubic.nvars() != 5 || !cubic.is_homogeneous_of_degree(3) || cubic.is_zero())
        throw DomainError("normalize_line_coords needs a nonzero cubic in x1..x5");
    if (line.rows() != 2 || line.cols() != 5) throw DomainError("a line is given by a 2x5 spanning matrix");
    if (rank(line) != 2) throw DomainError("degenerate line: spanning rows are dependent");

    // Frame: columns 4, 5 span the line; columns 1..3 complete with unit vectors.
    std::vector<std::vector<Rational>> cols{line.row(0), line.row(1)};
    for (std::size_t k = 0; k < 5 && cols.size() < 5; ++k) {
        std::vector<Rational> e(5, Rational(0));
        e[k] = 1;
        auto trial = cols;
        trial.push_back(e);
        if (rank(RatMatrix::from_rows(trial)) == trial.size()) cols = std::move(trial);
    }
    RatMatrix frame(5, 5, Rational(0));
    const std::size_t order[5] = {3, 4, 0, 1, 2};
    for (std::size_t c = 0; c < 5; ++c)
        for (std::size_t r = 0; r < 5; ++r) frame(r, order[c]) = cols[c][r];
    const QPoly moved = substitute_linear(cubic, frame);

    // Coefficient forms of y4^2, y5^2 and the line check.
    QPoly a(5), d(5);
    for (const auto& [m, c] : moved.terms()) {
        if (m.exp[3] + m.exp[4] == 3) throw DomainError("line not on cubic");
        Monomial rest = m;
        rest.exp[3] = 0;
        rest.exp[4] = 0;
        if (m.exp[3] == 2) a.add_term(rest, c);
        if (m.exp[4] == 2) d.add_term(rest, c);
    }
    auto linear_coeffs = [](const QPoly& p) {
        std::vector<Rational> v(3, Rational(0));
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < 3; ++i)
                if (m.exp[i] == 1) v[i] = c;
        return v;
    };
    const auto va = linear_coeffs(a);
    const auto vd = linear_coeffs(d);
    if (rank(RatMatrix::from_rows({va, vd})) != 2)
        throw DomainError("degenerate line: x4^2 and x5^2 coefficient forms are dependent");
    std::vector<Rational> vm;
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Rational> e(3, Rational(0));
        e[k] = 1;
        if (rank(RatMatrix::from_rows({va, e, vd})) == 3) {
            vm = e;
            break;
        }
    }
    // z = T y on the first three coordinates; substitute y = T^-1 z.
    RatMatrix t = RatMatrix::from_rows({va, vm, vd});
    RatMatrix aug(3, 6, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) aug(i, j) = t(i, j);
        aug(i, 3 + i) = 1;
    }
    rref(aug);
    RatMatrix block = RatMatrix::identity(5, Rational(1));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) block(i, j) = aug(i, 3 + j);
    NormalizedCubic out{substitute_linear(moved, block), frame * block};
    line_normal_form(out.cubic);  // throws if the construction went wrong
    return out;
}

QPoly gamma_quintic(const LineNormalForm& nf) {
    const QPoly x1 = QPoly::variable(3, 0, Rational(1));
    const QPoly x3 = QPoly::variable(3, 2, Rational(1));
    const Rational two = 2;
    return (x1 * x3 - nf.ell * nf.ell) * nf.C - nf.Q1 * nf.Q1 * x3 + two * (nf.Q1 * nf.Q2 * nf.ell) -
           nf.Q2 * nf.Q2 * x1;
}

bool harmonic_inversion_test(const LineNormalForm& nf) {
    const bool harmonic = nf.Q1.is_zero() && nf.Q2.is_zero();
    if (harmonic) {
        RatMatrix f = RatMatrix::identity(5, Rational(1));
        f(3, 3) = -1;
        f(4, 4) = -1;
        const QPoly cubic = reconstruct_cubic(nf);
        if (!(substitute_linear(cubic, f) == cubic)) throw InvariantViolation("harmonic inversion does not fix the cubic");
    }
    return harmonic;
}

const char* to_string(Genus2Kind k) {
    return k == Genus2Kind::smooth_genus_2 ? "smooth_genus_2" : "sum_of_two_elliptic";
}

RatMatrix conic_matrix(const LineNormalForm& nf) {
    RatMatrix m(3, 3, Rational(0));
    m(0, 2) = Rational(1, 2);
    m(2, 0) = Rational(1, 2);
    if (!nf.ell.is_zero() && !nf.ell.is_homogeneous_of_degree(1)) throw DomainError("ell must be a linear form");
    std::vector<Rational> l(3, Rational(0));
    for (const auto& [mono, c] : nf.ell.terms())
        for (std::size_t i = 0; i < 3; ++i)
            if (mono.exp[i] == 1) l[i] = c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) -= l[i] * l[j];
    return m;
}

Genus2Kind genus2_classification(const LineNormalForm& nf) {
    if (!harmonic_inversion_test(nf)) throw DomainError("genus2_classification needs Q1 = Q2 = 0");
    return rank(conic_matrix(nf)) == 3 ? Genus2Kind::smooth_genus_2 : Genus2Kind::sum_of_two_elliptic;
}

// --------------------------------------------------------- invariant cubics

std::string family_representation(std::string_view name) {
    if (name == "d2") return "d2:L+L1+L2+2T";
    if (name == "d3") return "d3:2V1/3+T";
    if (name == "d5") return "d5:V1/5+V2/5+T";
    if (name == "d6") return "d6:V1/6+V2/6+T";
    if (name == "a5") return "a5:std";
    throw DomainError("no invariant family for '" + std::string(name) + "'");
}

std::vector<std::string> family_polynomials(std::string_view name) {
    if (name == "d2")
        return {"x1^2*x4", "x2^2*x4", "x3^2*x4", "x1^2*x5", "x2^2*x5", "x3^2*x5", "x4^3", "x5^3", "x1*x2*x3"};
    if (name == "d3")
        return {"x5^3",
                "x1^2*x5 + x2^2*x5",
                "x3^2*x5 + x4^2*x5",
                "x1^3 - 3*x1*x2^2",
                "x3^3 - 3*x3*x4^2",
                "x1*x3*x5 + x2*x4*x5",
                "x1*x3^2 - x1*x4^2 - 2*x2*x3*x4",
                "x1^2*x3 - x2^2*x3 - 2*x1*x2*x4"};
    if (name == "d5")
        return {"x5^3", "x1^2*x5 + x2^2*x5", "x3^2*x5 + x4^2*x5", "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4",
                "-x1*x3^2 + x1*x4^2 + 2*x2*x3*x4"};
    if (name == "d6")
        return {"x5^3", "x1^2*x5 + x2^2*x5", "x3^2*x5 + x4^2*x5", "x3^3 - 3*x3*x4^2",
                "x1^2*x3 - x2^2*x3 + 2*x1*x2*x4"};
    if (name == "a5")
        return {"x4^3 + x1^2*x4 - x2^2*x4 + x3^2*x4 - x2^2*x3 + 3*x3*x4^2 + x3*x5^2 + 2*x3^2*x5 + 2*x1*x2*x3 + "
                "2*x1*x2*x4 + 2*x1*x2*x5 + 2*x3*x4*x5",
                "-x3^3 + x1^2*x3 - x2^2*x3 - x3*x4^2 + x1^2*x4 - 3*x3^2*x4 - x4*x5^2 - 2*x4^2*x5 + 2*x1*x2*x3 + "
                "2*x1*x2*x4 + 2*x1*x2*x5 - 2*x3*x4*x5"};
    throw DomainError("no invariant family for '" + std::string(name) + "'");
}

bool in_span(const std::vector<CycloPoly>& basis, const CycloPoly& f) {
    if (f.is_zero()) return true;
    if (basis.empty()) return false;
    const unsigned m = f.terms().begin()->second.conductor();
    const unsigned degree = f.total_degree();
    std::vector<std::vector<CycloElem>> rows;
    for (const auto& b : basis) rows.push_back(form_coordinates(b, degree, m));
    const std::size_t r = rank(Matrix<CycloElem>::from_rows(rows));
    rows.push_back(form_coordinates(f, degree, m));
    return rank(Matrix<CycloElem>::from_rows(rows)) == r;
}

FamilyReport family_membership_check(std::string_view name) {
    FamilyReport out;
    out.name = std::string(name);
    out.representation = family_representation(name);
    const Representation rep = build_representation(out.representation);
    const std::vector<int> trivial(rep.group.generators().size(), 1);
    const auto basis = eigenspace_cubics(rep, std::span<const int>(trivial));
    out.dimension = basis.size();
    out.polynomials = family_polynomials(name);
    out.all_member = true;
    for (const auto& text : out.polynomials) {
        const bool ok = in_span(basis, embed(parse_poly(text, 5), rep.conductor));
        out.member.push_back(ok);
        out.all_member = out.all_member && ok;
    }
    return out;
}

std::vector<QPoly> family_basis(std::string_view name) {
    const Representation rep = build_representation(family_representation(name));
    const std::vector<int> trivial(rep.group.generators().size(), 1);
    std::vector<QPoly> out;
    for (const auto& b : eigenspace_cubics(rep, std::span<const int>(trivial))) {
        auto q = try_rationalize(b);
        if (!q) throw InvariantViolation("invariant cubic for " + std::string(name) + " is not rational");
        out.push_back(std::move(*q));
    }
    return out;
}

QPoly klein_cubic() { return parse_poly("x1*x5^2 + x5*x3^2 + x3*x4^2 + x4*x2^2 + x2*x1^2", 5); }

QPoly fermat_cubic() { return parse_poly("x1^3 + x2^3 + x3^3 + x4^3 + x5^3", 5); }

namespace {

QPoly random_member(const std::vector<QPoly>& basis, std::mt19937_64& rng, std::vector<Integer>& params) {
    std::uniform_int_distribution<int> dist(-5, 5);
    QPoly f(5);
    params.clear();
    for (const auto& b : basis) {
        const int c = dist(rng);
        params.emplace_back(c);
        if (c != 0) f += Rational(c) * b;
    }
    return f;
}

// Common singular point of every member: all partials of all basis forms.
bool common_singular_point(const std::vector<QPoly>& basis) {
    std::vector<QPoly> gens;
    for (const auto& b : basis)
        for (auto& p : partials(b))
            if (!p.is_zero()) gens.push_back(std::move(p));
    if (gens.empty()) return true;
    return !projective_empty(std::span<const QPoly>(gens));
}

} // namespace

std::optional<std::vector<std::size_t>> singular_subspace_certificate(const std::vector<QPoly>& basis) {
    if (basis.empty()) return std::nullopt;
    const std::size_t n = basis.front().nvars();
    // Subsets by increasing size; |S| = 1 is a point, covered by the first tier.
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask)
        if (std::popcount(mask) >= 2) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (const unsigned mask : masks) {
        bool contained = true;
        std::set<std::size_t> live;  // k outside S with d/dx_k nonzero on P
        for (const auto& b : basis) {
            for (const auto& [m, c] : b.terms()) {
                std::size_t outside = 0;
                std::size_t last = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (!(mask & (1u << i)) && m.exp[i] != 0) {
                        outside += m.exp[i];
                        last = i;
                    }
                if (outside == 0) contained = false;
                if (outside == 1) live.insert(last);
            }
            if (!contained) break;
        }
        if (!contained) continue;
        const auto dim = static_cast<std::size_t>(std::popcount(mask)) - 1;
        if (live.size() > dim) continue;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        return s;
    }
    return std::nullopt;
}

namespace {

SmoothnessReport scan_basis(std::string name, const std::vector<QPoly>& basis, std::uint64_t seed,
                            std::size_t max_attempts) {
    SmoothnessReport out;
    out.name = std::move(name);
    std::mt19937_64 rng(seed);
    std::vector<Integer> params;
    for (std::size_t k = 0; k < max_attempts && !basis.empty(); ++k) {
        const QPoly f = random_member(basis, rng, params);
        ++out.attempts;
        if (f.is_zero()) continue;
        if (smooth_cubic(f) == Smoothness::smooth) {
            out.smooth_found = true;
            out.parameters = params;
            out.cubic = to_string(f);
            break;
        }
    }
    return out;
}

} // namespace

SmoothnessReport smoothness_scan(std::string_view name, std::uint64_t seed, std::size_t max_attempts) {
    if (name == "klein") {
        SmoothnessReport out;
        out.name = "klein";
        out.attempts = 1;
        const QPoly f = klein_cubic();
        out.smooth_found = smooth_cubic(f) == Smoothness::smooth;
        out.cubic = to_string(f);
        return out;
    }
    return scan_basis(std::string(name), family_basis(name), seed, max_attempts);
}

// ------------------------------------------------------------ order-8 scan

std::vector<D4Decomposition> d4_decompositions() {
    // Traces on (a, a^2, b, ab) of the summands of the order-8 dihedral group;
    // V2/4 is L1+L2 and V3/4 is V1/4, so these cover every 5-dimensional
    // representation up to equivalence.
    struct Piece {
        Summand s;
        int ta, ta2, tb, tab;
    };
    const std::vector<Piece> pieces{
        {{Summand::Kind::V, 1, 4}, 0, -2, 0, 0},
        {{Summand::Kind::T, 0, 0}, 1, 1, 1, 1},
        {{Summand::Kind::L, 0, 0}, 1, 1, -1, -1},
        {{Summand::Kind::L1, 0, 0}, -1, 1, 1, -1},
        {{Summand::Kind::L2, 0, 0}, -1, 1, -1, 1},
    };
    const std::set<std::pair<int, int>> cases{{-1, 1}, {3, 1}, {1, -3}};
    std::vector<D4Decomposition> out;
    for (int v = 0; v <= 2; ++v)
        for (int t = 0; t <= 5; ++t)
            for (int l = 0; l <= 5; ++l)
                for (int l1 = 0; l1 <= 5; ++l1)
                    for (int l2 = 0; l2 <= 5; ++l2) {
                        if (2 * v + t + l + l1 + l2 != 5) continue;
                        const int mult[5] = {v, t, l, l1, l2};
                        int ta = 0, ta2 = 0, tb = 0, tab = 0;
                        std::vector<Summand> parts;
                        for (std::size_t p = 0; p < pieces.size(); ++p) {
                            ta += mult[p] * pieces[p].ta;
                            ta2 += mult[p] * pieces[p].ta2;
                            tb += mult[p] * pieces[p].tb;
                            tab += mult[p] * pieces[p].tab;
                        }
                        if (tb != 1 || tab != 1 || cases.count({ta, ta2}) == 0) continue;
                        // V blocks first, then T, L, L1, L2
                        for (std::size_t p = 0; p < pieces.size(); ++p)
                            for (int k = 0; k < mult[p]; ++k) parts.push_back(pieces[p].s);
                        out.push_back({std::move(parts), ta, ta2});
                    }
    return out;
}

D4ScanReport d4_nonexistence_scan(std::uint64_t seed, std::size_t samples) {
    D4ScanReport out;
    const auto decomps = d4_decompositions();
    struct Task {
        std::size_t case_index;
        LinearCharacter chi;
    };
    std::vector<Task> tasks;
    std::vector<Representation> reps;
    for (std::size_t i = 0; i < decomps.size(); ++i) {
        reps.push_back(build_dihedral_representation(4, decomps[i].parts));
        out.cases.push_back({to_string(decomps[i].parts), decomps[i].trace_a, decomps[i].trace_a2, {}});
        for (auto& chi : linear_characters(reps.back().group)) tasks.push_back({i, chi});
    }
    // Sanity: the traces claimed by the enumeration match the built matrices.
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& g = reps[i].group;
        const Element a = g.generators()[0];
        if (!(trace(reps[i].matrix(a)) == CycloElem(reps[i].conductor, Rational(decomps[i].trace_a))) ||
            !(trace(reps[i].matrix(g.mul(a, a))) == CycloElem(reps[i].conductor, Rational(decomps[i].trace_a2))))
            throw InvariantViolation("order-8 decomposition traces disagree with the matrices");
    }

    std::vector<std::future<CharacterScan>> futures;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        futures.push_back(std::async(std::launch::deferred, [&, t] {
            const auto& task = tasks[t];
            CharacterScan r;
            r.character = task.chi.name;
            std::vector<QPoly> basis;
            for (const auto& b : eigenspace_cubics(reps[task.case_index], std::span<const int>(task.chi.values))) {
                auto q = try_rationalize(b);
                if (!q) throw InvariantViolation("order-8 eigenspace is not rational");
                basis.push_back(std::move(*q));
            }
            r.dimension = basis.size();
            r.base_singular_point_found = common_singular_point(basis);
            if (!r.base_singular_point_found) {
                if (auto sub = singular_subspace_certificate(basis)) r.singular_subspace = std::move(*sub);
            }
            if (!r.base_singular_point_found && r.singular_subspace.empty()) {
                std::mt19937_64 rng(seed + t);
                std::vector<Integer> params;
                for (std::size_t k = 0; k < samples; ++k) {
                    const QPoly f = random_member(basis, rng, params);
                    if (f.is_zero()) continue;
                    ++r.samples;
                    if (smooth_cubic(f) == Smoothness::smooth) {
                        r.smooth_found = true;
                        r.sampled_members_all_singular = false;
                    }
                }
            }
            return r;
        }));
    for (std::size_t t = 0; t < tasks.size(); ++t) out.cases[tasks[t].case_index].characters.push_back(futures[t].get());

    for (unsigned order : {16u, 24u, 32u, 40u, 48u}) {
        const FiniteGroup g = enumerate_group("dihedral", order / 2);
        const unsigned n = order / 2;
        const Element r = g.power(g.generators()[0], n / 4);
        const Element b = g.generators()[1];
        const auto sub = generated_subgroup(g, {r, b});
        const bool d4 = n % 4 == 0 && sub.size() == 8 && element_order(g, r) == 4 &&
                        g.mul(g.mul(b, r), b) == g.inverse(r);
        out.containment.push_back({order, d4});
    }

    out.control = smoothness_scan("d5", seed);
    out.no_smooth_cubic = true;
    for (const auto& c : out.cases)
        for (const auto& s : c.characters) out.no_smooth_cubic = out.no_smooth_cubic && !s.smooth_found;
    return out;
}

} // namespace fanocfg
