#include "fanocfg/representation.hpp"

#include "fanocfg/errors.hpp"

#include <cctype>
#include <map>
#include <numeric>

namespace fanocfg {

namespace {

class DecompositionParser {
public:
    explicit DecompositionParser(std::string_view text) : text_(text) {}

    std::vector<Summand> parse() {
        std::vector<Summand> out;
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty decomposition", pos_);
        while (true) {
            const unsigned mult = peek_digit() ? number() : 1;
            if (mult == 0) throw ParseError("zero multiplicity", pos_);
            const Summand s = label();
            for (unsigned i = 0; i < mult; ++i) out.push_back(s);
            skip_space();
            if (pos_ == text_.size()) break;
            if (text_[pos_] != '+') throw ParseError("expected '+'", pos_);
            ++pos_;
            skip_space();
        }
        return out;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    unsigned number() {
        if (!peek_digit()) throw ParseError("expected a number", pos_);
        unsigned v = 0;
        while (peek_digit()) {
            v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
            if (v > 100000) throw ParseError("number too large", pos_);
        }
        return v;
    }

    Summand label() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("expected a summand label", pos_);
        const std::size_t start = pos_;
        const char c = text_[pos_++];
        Summand s;
        if (c == 'T') {
            s.kind = Summand::Kind::T;
        } else if (c == 'L') {
            s.kind = Summand::Kind::L;
            if (pos_ < text_.size() && text_[pos_] == '1') {
                s.kind = Summand::Kind::L1;
                ++pos_;
            } else if (pos_ < text_.size() && text_[pos_] == '2') {
                s.kind = Summand::Kind::L2;
                ++pos_;
            }
        } else if (c == 'V') {
            s.kind = Summand::Kind::V;
            s.k = number();
            if (pos_ == text_.size() || text_[pos_] != '/') throw ParseError("expected '/' in V label", pos_);
            ++pos_;
            s.n = number();
            if (s.n == 0 || s.k == 0 || s.k >= s.n) throw ParseError("V_{k/n} needs 0 < k < n", start);
        } else {
            throw ParseError("unknown summand label", start);
        }
        if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("unknown summand label", start);
        return s;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string summand_text(const Summand& s) {
    switch (s.kind) {
    case Summand::Kind::V:
        return "V" + std::to_string(s.k) + "/" + std::to_string(s.n);
    case Summand::Kind::T:
        return "T";
    case Summand::Kind::L:
        return "L";
    case Summand::Kind::L1:
        return "L1";
    case Summand::Kind::L2:
        return "L2";
    }
    return "?";
}

unsigned total_dimension(std::span<const Summand> parts) {
    unsigned d = 0;
    for (const auto& s : parts) d += s.dimension();
    return d;
}

// Values of a one-dimensional summand on (a, b).
std::pair<int, int> linear_values(Summand::Kind kind) {
    switch (kind) {
    case Summand::Kind::T:
        return {1, 1};
    case Summand::Kind::L:
        return {1, -1};
    case Summand::Kind::L1:
        return {-1, 1};
    case Summand::Kind::L2:
        return {-1, -1};
    default:
        throw DomainError("not a linear summand");
    }
}

void verify_homomorphism(const FiniteGroup& g, const std::vector<Matrix<CycloElem>>& m) {
    for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
            if (!(m[x] * m[y] == m[g.mul(x, y)]))
                throw InvariantViolation("representation of " + g.name() + " is not a homomorphism at (" +
                                         g.label(x) + ", " + g.label(y) + ")");
}

Representation from_matrix_group(std::string label, MatrixGroup mg, unsigned conductor) {
    Representation rep{std::move(label), std::move(mg.group), conductor, std::move(mg.matrices)};
    return rep;
}

Representation build_z2(std::span<const Summand> parts) {
    if (total_dimension(parts) != 5) throw DomainError("representation must have dimension 5");
    const CycloElem one = CycloElem::one(1);
    Matrix<CycloElem> g = Matrix<CycloElem>::identity(5, one);
    std::size_t i = 0;
    for (const auto& s : parts) {
        if (s.kind == Summand::Kind::L) g(i, i) = -one;
        else if (s.kind != Summand::Kind::T) throw DomainError("Z/2 accepts only T and L summands");
        ++i;
    }
    FiniteGroup grp = enumerate_group("z2");
    std::vector<Matrix<CycloElem>> mats{Matrix<CycloElem>::identity(5, one), g};
    verify_homomorphism(grp, mats);
    return {"z2:" + to_string(parts), std::move(grp), 1, std::move(mats)};
}

} // namespace

std::vector<Summand> parse_decomposition(std::string_view text) { return DecompositionParser(text).parse(); }

std::string to_string(std::span<const Summand> parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        out += summand_text(parts[i]);
        i = j;
    }
    return out;
}

std::vector<Matrix<CycloElem>> Representation::generator_matrices() const {
    std::vector<Matrix<CycloElem>> out;
    for (Element g : group.generators()) out.push_back(matrices.at(g));
    return out;
}

Representation build_dihedral_representation(unsigned n, std::span<const Summand> parts) {
    if (n < 2) throw DomainError("dihedral groups need n >= 2");
    if (total_dimension(parts) != 5)
        throw DomainError("representation " + to_string(parts) + " has dimension " +
                          std::to_string(total_dimension(parts)) + ", expected 5");
    const unsigned m = std::lcm(4u, n);
    const CycloElem zero(m);
    const CycloElem one = CycloElem::one(m);
    Matrix<CycloElem> a(5, 5, zero);
    Matrix<CycloElem> b(5, 5, zero);
    std::size_t i = 0;
    for (const auto& s : parts) {
        if (s.kind == Summand::Kind::V) {
            if (s.n != n) throw DomainError("summand " + summand_text(s) + " does not belong to D" + std::to_string(n));
            const CycloElem c = cos_2pi(m, s.k, n);
            const CycloElem sn = sin_2pi(m, s.k, n);
            a(i, i) = c;
            a(i, i + 1) = -sn;
            a(i + 1, i) = sn;
            a(i + 1, i + 1) = c;
            b(i, i) = one;
            b(i + 1, i + 1) = -one;
            i += 2;
            continue;
        }
        if ((s.kind == Summand::Kind::L1 || s.kind == Summand::Kind::L2) && n % 2 != 0)
            throw DomainError(summand_text(s) + " exists only for even n");
        const auto [va, vb] = linear_values(s.kind);
        a(i, i) = va == 1 ? one : -one;
        b(i, i) = vb == 1 ? one : -one;
        ++i;
    }
    const Matrix<CycloElem> id = Matrix<CycloElem>::identity(5, one);
    const Matrix<CycloElem> a_inv = power(a, n - 1);
    if (!(power(a, n) == id) || !(b * b == id) || !(b * a * b == a_inv))
        throw InvariantViolation("dihedral relations fail for " + to_string(parts));

    FiniteGroup grp = enumerate_group("dihedral", n);
    std::vector<Matrix<CycloElem>> mats(grp.order());
    Matrix<CycloElem> ak = id;
    for (unsigned k = 0; k < n; ++k) {
        mats[k] = ak;
        mats[k + n] = ak * b;
        ak = ak * a;
    }
    verify_homomorphism(grp, mats);
    return {"d" + std::to_string(n) + ":" + to_string(parts), std::move(grp), m, std::move(mats)};
}

Representation build_representation(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'group:decomposition'", spec.size());
    const std::string_view name = spec.substr(0, colon);
    const std::string_view body = spec.substr(colon + 1);
    if (name == "a5" || name == "klein55") {
        // "paper" is an accepted alias of "std"
        if (body != "std" && body != "paper")
            throw DomainError(std::string(name) + " supports only the 'std' representation");
        if (name == "a5") {
            auto [a, b] = a5_generator_matrices();
            return from_matrix_group("a5:std", close_matrix_group("a5", {a, b}, {"a", "b"}), 1);
        }
        auto [d, c] = klein_generator_matrices();
        return from_matrix_group("klein55:std", close_matrix_group("klein55", {d, c}, {"d", "c"}), 11);
    }
    std::vector<Summand> parts;
    try {
        parts = parse_decomposition(body);
    } catch (const ParseError& e) {
        throw ParseError(std::string("bad decomposition '") + std::string(body) + "'", colon + 1 + e.position());
    }
    if (name == "z2") return build_z2(parts);
    if (name.size() >= 2 && name[0] == 'd') {
        unsigned n = 0;
        for (char c : name.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("unknown group '" + std::string(name) + "'");
            n = n * 10 + static_cast<unsigned>(c - '0');
            if (n > 10000) throw DomainError("dihedral index too large");
        }
        return build_dihedral_representation(n, parts);
    }
    throw DomainError("unknown group '" + std::string(name) + "'");
}

std::vector<TraceRow> rep_trace_table(const Representation& rep) {
    std::map<unsigned, TraceRow> rows;
    const FiniteGroup& g = rep.group;
    for (Element x = 0; x < g.order(); ++x) {
        const unsigned o = element_order(g, x);
        CycloElem t = trace(rep.matrix(x));
        auto [it, inserted] = rows.try_emplace(o);
        TraceRow& row = it->second;
        if (inserted) {
            row.order = o;
            row.trace = t;
            row.traces.push_back(std::move(t));
            continue;
        }
        bool known = false;
        for (const auto& s : row.traces) known = known || s == t;
        if (known) continue;
        bool conjugate = false;
        const long m = static_cast<long>(rep.conductor);
        for (long j = 1; j <= std::max(1L, m) && !conjugate; ++j)
            if (std::gcd(j, m) == 1 && row.trace.galois(j) == t) conjugate = true;
        if (!conjugate)
            throw InvariantViolation("elements of order " + std::to_string(o) + " have traces " +
                                     row.trace.to_string() + " and " + t.to_string());
        row.traces.push_back(std::move(t));
    }
    std::vector<TraceRow> out;
    for (auto& [o, row] : rows) out.push_back(std::move(row));
    return out;
}

std::vector<CycloElem> form_coordinates(const CycloPoly& f, unsigned degree, unsigned conductor) {
    const auto basis = monomials_of_degree(f.nvars(), degree);
    std::vector<CycloElem> out(basis.size(), CycloElem(conductor));
    std::size_t found = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (auto c = f.coefficient(basis[j])) {
            out[j] = *c;
            ++found;
        }
    if (found != f.size()) throw DomainError("form is not homogeneous of degree " + std::to_string(degree));
    return out;
}

CycloPoly form_from_coordinates(std::span<const CycloElem> coords, std::size_t nvars, unsigned degree) {
    const auto basis = monomials_of_degree(nvars, degree);
    if (coords.size() != basis.size()) throw DomainError("coordinate vector has the wrong length");
    CycloPoly out(nvars);
    for (std::size_t j = 0; j < basis.size(); ++j) out.add_term(basis[j], coords[j]);
    return out;
}

Matrix<CycloElem> symmetric_power_matrix(const Matrix<CycloElem>& m, unsigned degree) {
    if (!m.is_square() || m.rows() == 0) throw DomainError("symmetric power of a non-square matrix");
    const std::size_t n = m.rows();
    const unsigned conductor = m(0, 0).conductor();
    const auto basis = monomials_of_degree(n, degree);
    Matrix<CycloElem> out(basis.size(), basis.size(), CycloElem(conductor));
    const CycloElem one = CycloElem::one(conductor);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto image = substitute_linear(CycloPoly::monomial(n, basis[j], one), m);
        const auto col = form_coordinates(image, degree, conductor);
        for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = col[i];
    }
    return out;
}

Matrix<CycloElem> sym3_action(const Representation& rep, Element g) {
    return symmetric_power_matrix(rep.matrix(g), 3);
}

std::vector<CycloPoly> eigenspace_cubics(const Representation& rep, std::span<const CycloElem> chi) {
    const FiniteGroup& g = rep.group;
    const auto& gens = g.generators();
    if (chi.size() != gens.size())
        throw DomainError("character needs one value per generator (" + std::to_string(gens.size()) + ")");
    const CycloElem one = CycloElem::one(rep.conductor);
    for (const auto& c : chi)
        if (c.conductor() != rep.conductor) throw DomainError("character values live in the wrong field");
    // Extend along shortest words and check multiplicativity on the table.
    std::vector<CycloElem> values(g.order(), one);
    for (Element x = 0; x < g.order(); ++x)
        for (std::size_t s : g.word(x)) values[x] *= chi[s];
    for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
            if (!(values[x] * values[y] == values[g.mul(x, y)]))
                throw DomainError("character is not a homomorphism on " + g.name());

    const std::size_t nb = monomials_of_degree(rep.dim(), 3).size();
    Matrix<CycloElem> stacked(nb * gens.size(), nb, CycloElem(rep.conductor));
    for (std::size_t s = 0; s < gens.size(); ++s) {
        const auto act = sym3_action(rep, gens[s]);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j) {
                CycloElem v = act(i, j);
                if (i == j) v -= chi[s];
                stacked(s * nb + i, j) = std::move(v);
            }
    }
    std::vector<CycloPoly> out;
    for (const auto& v : kernel_basis(std::move(stacked), one)) out.push_back(form_from_coordinates(v, rep.dim(), 3));
    return out;
}

std::vector<CycloPoly> eigenspace_cubics(const Representation& rep, std::span<const int> chi) {
    std::vector<CycloElem> values;
    for (int v : chi) values.emplace_back(rep.conductor, Rational(v));
    return eigenspace_cubics(rep, std::span<const CycloElem>(values));
}

} // namespace fanocfg
