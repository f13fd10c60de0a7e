#include "fanocfg/finite_group.hpp"

#include "fanocfg/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace fanocfg {

namespace {

int mod11(int v) { return ((v % PSL2Element::kPrime) + PSL2Element::kPrime) % PSL2Element::kPrime; }

std::string matrix_key(const Matrix<CycloElem>& m) {
    std::string key;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (const auto& q : m(i, j).coeffs()) {
                key += to_string(q);
                key += ',';
            }
            key += ';';
        }
    return key;
}

std::string dihedral_label(unsigned k, unsigned s) {
    std::string out;
    if (k == 1) out = "a";
    if (k > 1) out = "a^" + std::to_string(k);
    if (s == 1) out += out.empty() ? "b" : "*b";
    return out.empty() ? "e" : out;
}

FiniteGroup make_dihedral(unsigned n) {
    if (n < 2) throw DomainError("dihedral groups need n >= 2");
    const unsigned order = 2 * n;
    std::vector<std::string> labels;
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned k = 0; k < n; ++k) labels.push_back(dihedral_label(k, s));
    // index k + s*n stands for a^k b^s; (a^k b^s)(a^l b^t) = a^(k + (-1)^s l) b^(s+t)
    std::vector<Element> table(static_cast<std::size_t>(order) * order);
    for (unsigned x = 0; x < order; ++x)
        for (unsigned y = 0; y < order; ++y) {
            const unsigned k = x % n, s = x / n, l = y % n, t = y / n;
            const unsigned rot = s == 0 ? (k + l) % n : (k + n - l) % n;
            table[x * order + y] = rot + ((s + t) % 2) * n;
        }
    return FiniteGroup("d" + std::to_string(n), FiniteGroup::Family::dihedral, n, std::move(labels),
                       std::move(table), 0, {1, n}, {"a", "b"});
}

FiniteGroup make_z2() {
    return FiniteGroup("z2", FiniteGroup::Family::cyclic2, 2, {"e", "g"}, {0, 1, 1, 0}, 0, {1}, {"g"});
}

FiniteGroup make_psl2() {
    const auto elements = enumerate_psl2_11();
    std::map<PSL2Element, Element> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Element>(i));
    const std::size_t n = elements.size();
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index.at(elements[i] * elements[j]);
    std::vector<std::string> labels;
    for (const auto& e : elements) labels.push_back(e.to_string());
    const Element s = index.at(PSL2Element(0, -1, 1, 0));
    const Element t = index.at(PSL2Element(1, 1, 0, 1));
    return FiniteGroup("psl2_11", FiniteGroup::Family::psl2, 11, std::move(labels), std::move(table),
                       index.at(PSL2Element::identity()), {s, t}, {"s", "t"});
}

Matrix<CycloElem> rational_matrix(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<CycloElem>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (const auto& q : r) out.back().emplace_back(1u, q);
    }
    return Matrix<CycloElem>::from_rows(out);
}

} // namespace

PSL2Element::PSL2Element(int a, int b, int c, int d) {
    std::array<int, 4> v{mod11(a), mod11(b), mod11(c), mod11(d)};
    if (mod11(v[0] * v[3] - v[1] * v[2]) != 1) throw DomainError("PSL2(F_11) element must have determinant 1");
    const int first = v[0] != 0 ? v[0] : v[1] != 0 ? v[1] : v[2];
    if (first > 5)
        for (auto& x : v) x = mod11(-x);
    for (std::size_t i = 0; i < 4; ++i) e_[i] = static_cast<std::uint8_t>(v[i]);
}

PSL2Element operator*(const PSL2Element& x, const PSL2Element& y) {
    return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
            x.c() * y.b() + x.d() * y.d()};
}

std::string PSL2Element::to_string() const {
    return "[" + std::to_string(a()) + "," + std::to_string(b()) + ";" + std::to_string(c()) + "," +
           std::to_string(d()) + "]";
}

std::vector<PSL2Element> enumerate_psl2_11() {
    std::set<PSL2Element> seen;
    constexpr int p = PSL2Element::kPrime;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if (mod11(a * d - b * c) == 1) seen.insert(PSL2Element(a, b, c, d));
    return {seen.begin(), seen.end()};
}

FiniteGroup::FiniteGroup(std::string name, Family family, unsigned parameter, std::vector<std::string> labels,
                         std::vector<Element> table, Element identity, std::vector<Element> generators,
                         std::vector<std::string> generator_names)
    : name_(std::move(name)),
      family_(family),
      parameter_(parameter),
      labels_(std::move(labels)),
      table_(std::move(table)),
      identity_(identity),
      generators_(std::move(generators)),
      generator_names_(std::move(generator_names)) {
    const std::size_t n = labels_.size();
    if (table_.size() != n * n) throw DomainError("multiplication table has the wrong size");
    if (generators_.size() != generator_names_.size()) throw DomainError("generator names do not match");
    inverse_.assign(n, identity_);
    for (Element g = 0; g < n; ++g) {
        bool found = false;
        for (Element h = 0; h < n && !found; ++h)
            if (mul(g, h) == identity_) {
                inverse_[g] = h;
                found = true;
            }
        if (!found) throw DomainError("element " + labels_[g] + " has no inverse");
    }
    // Breadth-first words from the identity, right-multiplying by generators.
    words_.assign(n, {});
    std::vector<bool> reached(n, false);
    reached[identity_] = true;
    std::deque<Element> queue{identity_};
    while (!queue.empty()) {
        const Element g = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < generators_.size(); ++s) {
            const Element h = mul(g, generators_[s]);
            if (reached[h]) continue;
            reached[h] = true;
            words_[h] = words_[g];
            words_[h].push_back(s);
            queue.push_back(h);
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
        throw DomainError("generators of " + name_ + " do not generate the group");
}

Element FiniteGroup::power(Element g, unsigned k) const {
    Element out = identity_;
    for (unsigned i = 0; i < k; ++i) out = mul(out, g);
    return out;
}

MatrixGroup close_matrix_group(std::string name, const std::vector<Matrix<CycloElem>>& generators,
                               const std::vector<std::string>& generator_names, std::size_t max_order) {
    if (generators.empty()) throw DomainError("close_matrix_group needs generators");
    const std::size_t dim = generators.front().rows();
    const CycloElem one = one_like(generators.front()(0, 0));
    std::vector<Matrix<CycloElem>> elements{Matrix<CycloElem>::identity(dim, one)};
    std::vector<std::string> labels{"e"};
    std::unordered_map<std::string, Element> index{{matrix_key(elements[0]), 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (std::size_t s = 0; s < generators.size(); ++s) {
            Matrix<CycloElem> next = elements[head] * generators[s];
            auto key = matrix_key(next);
            if (index.count(key) != 0) continue;
            if (elements.size() >= max_order) throw DomainError("matrix group " + name + " exceeds the order bound");
            index.emplace(std::move(key), static_cast<Element>(elements.size()));
            labels.push_back(head == 0 ? generator_names[s] : labels[head] + "*" + generator_names[s]);
            elements.push_back(std::move(next));
        }
    }
    const std::size_t n = elements.size();
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto it = index.find(matrix_key(elements[i] * elements[j]));
            if (it == index.end()) throw InvariantViolation("matrix group is not closed");
            table[i * n + j] = it->second;
        }
    std::vector<Element> gens;
    for (const auto& g : generators) gens.push_back(index.at(matrix_key(g)));
    FiniteGroup group(std::move(name), FiniteGroup::Family::matrix, 0, std::move(labels), std::move(table), 0,
                      std::move(gens), generator_names);
    return {std::move(group), std::move(elements)};
}

std::pair<Matrix<CycloElem>, Matrix<CycloElem>> a5_generator_matrices() {
    const Rational h(1, 2);
    const Rational z(0);
    auto a = rational_matrix({{-1, z, z, z, z}, {z, -1, z, z, z}, {z, z, 1, z, z}, {z, z, z, 1, z}, {z, z, z, z, 1}});
    auto b = rational_matrix({{-h, -h, h, -h, z},
                              {h, z, h, z, -h},
                              {-h, h, h, h, z},
                              {h, z, h, z, h},
                              {z, z, Rational(-2), Rational(-2), Rational(-1)}});
    return {a, b};
}

std::pair<Matrix<CycloElem>, Matrix<CycloElem>> klein_generator_matrices() {
    constexpr unsigned m = 11;
    const CycloElem zero(m);
    Matrix<CycloElem> diag(5, 5, zero);
    const std::array<long, 5> weights{1, 9, 3, 4, 5};
    for (std::size_t i = 0; i < 5; ++i) diag(i, i) = CycloElem::zeta_power(m, weights[i]);
    // x_i -> x_tau(i) with tau = (1 5 3 4 2): each x_i x_tau(i)^2 maps to the next monomial
    const std::array<std::size_t, 5> tau{4, 0, 3, 1, 2};
    Matrix<CycloElem> cycle(5, 5, zero);
    for (std::size_t i = 0; i < 5; ++i) cycle(i, tau[i]) = CycloElem::one(m);
    return {diag, cycle};
}

FiniteGroup enumerate_group(std::string_view name, std::optional<unsigned> n) {
    if (name == "z2") return make_z2();
    if (name == "psl2_11") return make_psl2();
    if (name == "dihedral") {
        if (!n) throw DomainError("dihedral needs n");
        return make_dihedral(*n);
    }
    if (name.size() >= 2 && name[0] == 'd' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return make_dihedral(static_cast<unsigned>(std::stoul(std::string(name.substr(1)))));
    if (name == "a5") {
        auto [a, b] = a5_generator_matrices();
        return close_matrix_group("a5", {a, b}, {"a", "b"}).group;
    }
    if (name == "klein55") {
        auto [d, c] = klein_generator_matrices();
        return close_matrix_group("klein55", {d, c}, {"d", "c"}).group;
    }
    throw DomainError("unknown group '" + std::string(name) + "'");
}

unsigned element_order(const FiniteGroup& g, Element x) {
    unsigned k = 1;
    Element y = x;
    while (y != g.identity()) {
        y = g.mul(y, x);
        ++k;
        if (k > g.order()) throw InvariantViolation("element order exceeds group order");
    }
    return k;
}

std::vector<Element> involutions(const FiniteGroup& g) {
    std::vector<Element> out;
    for (Element x = 0; x < g.order(); ++x)
        if (x != g.identity() && g.mul(x, x) == g.identity()) out.push_back(x);
    return out;
}

std::map<unsigned, std::size_t> pair_order_histogram(const FiniteGroup& g, const std::vector<Element>& invs) {
    std::map<unsigned, std::size_t> hist;
    for (std::size_t i = 0; i < invs.size(); ++i)
        for (std::size_t j = i + 1; j < invs.size(); ++j) ++hist[element_order(g, g.mul(invs[i], invs[j]))];
    return hist;
}

std::map<unsigned, std::size_t> element_order_histogram(const FiniteGroup& g) {
    std::map<unsigned, std::size_t> hist;
    for (Element x = 0; x < g.order(); ++x) ++hist[element_order(g, x)];
    return hist;
}

std::vector<Element> conjugacy_orbit(const FiniteGroup& g, Element x, const std::vector<Element>& conjugators) {
    std::set<Element> orbit;
    for (Element h : conjugators) orbit.insert(g.mul(g.mul(h, x), g.inverse(h)));
    return {orbit.begin(), orbit.end()};
}

std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::set<Element> seen{g.identity()};
    std::deque<Element> queue{g.identity()};
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (Element s : gens) {
            const Element y = g.mul(x, s);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<LinearCharacter> linear_characters(const FiniteGroup& g) {
    switch (g.family()) {
    case FiniteGroup::Family::cyclic2:
        return {{"T", {1}}, {"L", {-1}}};
    case FiniteGroup::Family::dihedral: {
        std::vector<LinearCharacter> out{{"T", {1, 1}}, {"L", {1, -1}}};
        if (g.dihedral_n() % 2 == 0) {
            out.push_back({"L1", {-1, 1}});
            out.push_back({"L2", {-1, -1}});
        }
        return out;
    }
    default:
        throw DomainError("linear_characters supports only dihedral groups and Z/2, not " + g.name());
    }
}

} // namespace fanocfg
