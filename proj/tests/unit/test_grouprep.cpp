#include "doctest.h"

#include "fanocfg/errors.hpp"
#include "fanocfg/fano.hpp"
#include "fanocfg/finite_group.hpp"
#include "fanocfg/representation.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

using namespace fanocfg;

namespace {

using QMat = std::vector<std::vector<Rational>>;

QMat to_plain(const Matrix<CycloElem>& m) {
    QMat out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_rational();
    return out;
}

QMat plain_mul(const QMat& a, const QMat& b) {
    QMat out(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

QMat plain_pow(const QMat& a, int e) {
    QMat out = a;
    for (int i = 1; i < e; ++i) out = plain_mul(out, a);
    return out;
}

bool plain_is_identity(const QMat& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Matrix<CycloElem> identity(std::size_t n, unsigned m) { return Matrix<CycloElem>::identity(n, CycloElem::one(m)); }

} // namespace

TEST_CASE("PSL2(F_11) census matches a plain enumeration") {
    const auto census = oracle::psl2_11_census();
    const FiniteGroup g = enumerate_group("psl2_11");
    CHECK(g.order() == census.order);
    CHECK(census.order == 660);
    const auto invs = involutions(g);
    CHECK(invs.size() == census.involutions);
    CHECK(invs.size() == 55);
    for (const auto& [o, count] : pair_order_histogram(g, invs)) CHECK(count == census.pair_orders.at(o));
    for (const auto& [o, count] : element_order_histogram(g)) CHECK(count == census.element_orders.at(o));
}

TEST_CASE("PSL2 element canonicalisation") {
    const PSL2Element x(10, 0, 0, 10);
    CHECK(x == PSL2Element::identity());
    CHECK_THROWS_AS(PSL2Element(1, 1, 1, 1), DomainError);
    CHECK(enumerate_psl2_11().size() == 660);
}

TEST_CASE("group axioms") {
    for (const char* name : {"psl2_11", "a5", "d6", "klein55"}) {
        const FiniteGroup g = enumerate_group(name);
        const auto n = static_cast<Element>(g.order());
        for (Element x = 0; x < n; ++x) {
            CHECK(g.mul(x, g.inverse(x)) == g.identity());
            CHECK(g.mul(g.identity(), x) == x);
        }
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<Element> pick(0, n - 1);
        for (int t = 0; t < 1000; ++t) {
            const Element a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
}

TEST_CASE("PSL2 involutions form one conjugacy class") {
    const FiniteGroup g = enumerate_group("psl2_11");
    const auto invs = involutions(g);
    std::vector<Element> all(g.order());
    for (Element x = 0; x < g.order(); ++x) all[x] = x;
    CHECK(conjugacy_orbit(g, invs.front(), all) == invs);
    for (std::size_t i = 0; i < invs.size(); ++i)
        for (std::size_t j = i + 1; j < invs.size(); ++j) {
            const unsigned o = element_order(g, g.mul(invs[i], invs[j]));
            CHECK(o == element_order(g, g.mul(invs[j], invs[i])));
            CHECK((o == 2 || o == 3 || o == 5 || o == 6));
        }
}

TEST_CASE("involution counts and subgroup sizes") {
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"z2", 1}, {"d2", 3}, {"d3", 3}, {"d5", 5}, {"d6", 7}, {"a5", 15}, {"psl2_11", 55}};
    for (const auto& [name, count] : expected) CHECK(involutions(enumerate_group(name)).size() == count);
    CHECK(enumerate_group("a5").order() == 60);
    CHECK(enumerate_group("klein55").order() == 55);
    const FiniteGroup g = enumerate_group("psl2_11");
    CHECK(generated_subgroup(g, {g.generators()[0]}).size() == 2);
    CHECK_THROWS_AS(enumerate_group("nope"), DomainError);
}

TEST_CASE("dihedral relations on every built representation") {
    for (const char* spec : {"d2:L+L1+L2+2T", "d3:2V1/3+T", "d5:V1/5+V2/5+T", "d6:V1/6+V2/6+T", "d4:V1/4+T+L1+L2",
                             "d4:2V1/4+T", "d6:V1/6+L+L1+L2"}) {
        const Representation rep = build_representation(spec);
        const unsigned n = rep.group.dihedral_n();
        const auto gens = rep.generator_matrices();
        const auto& a = gens[0];
        const auto& b = gens[1];
        const auto id = identity(5, rep.conductor);
        CHECK(power(a, n) == id);
        CHECK(b * b == id);
        CHECK(b * a * b == power(a, n - 1));
    }
}

TEST_CASE("A5 relations with plain rational matrices") {
    const auto [ma, mb] = a5_generator_matrices();
    const QMat a = to_plain(ma), b = to_plain(mb);
    CHECK(plain_is_identity(plain_pow(a, 2)));
    CHECK(plain_is_identity(plain_pow(b, 3)));
    CHECK(plain_is_identity(plain_pow(plain_mul(a, b), 5)));
    CHECK_FALSE(plain_is_identity(a));
    CHECK_FALSE(plain_is_identity(b));
}

TEST_CASE("decomposition parsing") {
    const auto parts = parse_decomposition("2V1/3+T");
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].kind == Summand::Kind::V);
    CHECK(parts[0].k == 1);
    CHECK(parts[0].n == 3);
    CHECK(to_string(std::span<const Summand>(parts)) == "2V1/3+T");
    CHECK_THROWS_AS(parse_decomposition("V1/+T"), ParseError);
    CHECK_THROWS_AS(parse_decomposition("Q+T"), ParseError);
    CHECK_THROWS_AS(build_representation("d4:V1/4+L+L1+2T"), DomainError);
    CHECK_THROWS_AS(build_representation("d3:V1/3+L1+L2+T"), DomainError);
    CHECK_THROWS_AS(build_representation("d5:V1/3+V2/5+T"), DomainError);
}

TEST_CASE("trace tables") {
    auto lookup = [](const std::vector<TraceRow>& rows, unsigned order) {
        for (const auto& r : rows)
            if (r.order == order) return r;
        FAIL("order missing");
        return rows.front();
    };
    const auto a5 = rep_trace_table(build_representation("a5:std"));
    CHECK(lookup(a5, 2).trace == CycloElem(1, Rational(1)));
    CHECK(lookup(a5, 3).trace == CycloElem(1, Rational(-1)));
    CHECK(lookup(a5, 5).trace == CycloElem(1, Rational(0)));
    const auto d6 = rep_trace_table(build_representation("d6:V1/6+V2/6+T"));
    CHECK(lookup(d6, 6).trace.to_rational() == 1);
    CHECK(lookup(d6, 2).traces.size() == 1);
    const auto klein = rep_trace_table(build_representation("klein55:std"));
    const auto row = lookup(klein, 11);
    CHECK(row.traces.size() == 2);
    for (const auto& t : row.traces) CHECK(t * t + t + CycloElem(11, Rational(3)) == CycloElem(11));
    CHECK(lookup(klein, 5).trace == CycloElem(11, Rational(0)));
}

TEST_CASE("sym3 action is a right action") {
    const Representation rep = build_representation("a5:std");
    const auto n = static_cast<Element>(rep.group.order());
    CHECK(sym3_action(rep, rep.group.identity()) == identity(35, rep.conductor));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (int t = 0; t < 50; ++t) {
        const Element g = pick(rng), h = pick(rng);
        CHECK(sym3_action(rep, g) * sym3_action(rep, h) == sym3_action(rep, rep.group.mul(h, g)));
    }
}

TEST_CASE("eigenspace bases are eigenvectors") {
    struct Case {
        const char* spec;
        std::vector<int> chi;
    };
    const std::vector<Case> cases{{"d2:L+L1+L2+2T", {1, 1}}, {"d6:V1/6+V2/6+T", {1, -1}},
                                  {"d4:2V1/4+T", {-1, 1}}, {"a5:std", {1, 1}}};
    std::size_t checked = 0;
    for (const auto& c : cases) {
        const Representation rep = build_representation(c.spec);
        const auto basis = eigenspace_cubics(rep, std::span<const int>(c.chi));
        checked += basis.size();
        const auto gens = rep.group.generators();
        for (const auto& f : basis)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const auto coords = form_coordinates(f, 3, rep.conductor);
                const auto image = sym3_action(rep, gens[i]).apply(coords);
                for (std::size_t k = 0; k < coords.size(); ++k)
                    CHECK(image[k] == coords[k] * Rational(c.chi[i]));
                CHECK(substitute_linear(f, rep.matrix(gens[i])) == CycloElem(rep.conductor, Rational(c.chi[i])) * f);
            }
    }
    CHECK(checked > 0);
    // a non-homomorphism is rejected: chi(b) = -1 with chi(a) = 1 is fine
    // for d3, but chi(a) = -1 violates a^3 = 1
    const Representation d3 = build_representation("d3:2V1/3+T");
    const std::vector<int> bad{-1, 1};
    CHECK_THROWS_AS(eigenspace_cubics(d3, std::span<const int>(bad)), DomainError);
}

TEST_CASE("trivial eigenspace dimensions") {
    const std::vector<std::pair<std::string, std::size_t>> dims{{"d2", 11}, {"d3", 8}, {"d5", 5}, {"d6", 5}, {"a5", 2}};
    for (const auto& [name, dim] : dims) {
        CHECK(family_basis(name).size() == dim);
        const auto report = family_membership_check(name);
        CHECK(report.dimension == dim);
        CHECK(report.all_member);
    }
}

TEST_CASE("Klein cubic symmetries, checked numerically and exactly") {
    const auto [d, c] = klein_generator_matrices();
    const CycloPoly f = embed(klein_cubic(), 11);
    CHECK(substitute_linear(f, d) == f);
    CHECK(substitute_linear(f, c) == f);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<oracle::cplx> x;
    for (int i = 0; i < 5; ++i) x.emplace_back(u(rng), u(rng));
    for (const auto& m : {d, c}) {
        std::vector<oracle::cplx> y(5, 0);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) y[i] += oracle::embed(m(i, j)) * x[j];
        CHECK(std::abs(oracle::eval_complex(klein_cubic(), y) - oracle::eval_complex(klein_cubic(), x)) < 1e-9);
    }
}
