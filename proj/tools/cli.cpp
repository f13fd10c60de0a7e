#include "cli.hpp"

#include "fanocfg/errors.hpp"
#include "fanocfg/fano.hpp"
#include "fanocfg/poly_text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace fanocli {

using nlohmann::json;
using namespace fanocfg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

json factored_json(const Integer& z) {
    json out = json::object();
    if (z == 0) return out;
    for (const auto& [p, e] : factor_integer(z)) out[p.get_str()] = e;
    return out;
}

json signature_json(const Signature& s) { return json::array({s.positive, s.negative, s.zero}); }

json invariants_json(const LatticeInvariants& inv) {
    return {{"rank", inv.rank},
            {"signature", signature_json(inv.signature)},
            {"discriminant", integer_json(inv.discriminant)},
            {"discriminant_factored", factored_json(inv.discriminant)}};
}

json histogram_json(const std::map<unsigned, std::size_t>& h) {
    json out = json::object();
    for (const auto& [k, v] : h) out[std::to_string(k)] = v;
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    for (const auto& part : split(text, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
        }
    }
    return out;
}

// --------------------------------------------------------------- commands

struct GroupOptions {
    std::string name;
    std::string rep;
};

json cmd_group(const GroupOptions& o) {
    if (o.name.empty() == o.rep.empty()) throw UsageError("group: give exactly one of --name or --rep");
    json out;
    if (!o.rep.empty()) {
        const Representation rep = build_representation(o.rep);
        json rows = json::array();
        for (const auto& row : rep_trace_table(rep)) {
            json traces = json::array();
            for (const auto& t : row.traces) traces.push_back(t.to_string());
            rows.push_back({{"order", row.order}, {"trace", row.trace.to_string()}, {"traces", traces}});
        }
        out["representation"] = rep.label;
        out["conductor"] = rep.conductor;
        out["trace_table"] = rows;
        out["group"] = rep.group.name();
        out["order"] = rep.group.order();
        const auto invs = involutions(rep.group);
        out["involutions"] = invs.size();
        out["pair_orders"] = histogram_json(pair_order_histogram(rep.group, invs));
        out["element_orders"] = histogram_json(element_order_histogram(rep.group));
        return out;
    }
    const FiniteGroup g = enumerate_group(o.name);
    const auto invs = involutions(g);
    out["group"] = g.name();
    out["order"] = g.order();
    out["involutions"] = invs.size();
    out["pair_orders"] = histogram_json(pair_order_histogram(g, invs));
    out["element_orders"] = histogram_json(element_order_histogram(g));
    return out;
}

struct LatticeOptions {
    std::string name = "psl2_11";
    std::string rule;
    bool half = false;
};

json cmd_lattice(const LatticeOptions& o) {
    IntersectionRule rule = IntersectionRule::geometric();
    std::vector<int> xyzw{0, 2, 1, 0};
    if (!o.rule.empty()) {
        xyzw = parse_int_list(o.rule, "--rule");
        if (xyzw.size() != 4) throw UsageError("--rule: expected four integers x,y,z,w");
        rule = IntersectionRule::lambda(xyzw[0], xyzw[1], xyzw[2], xyzw[3]);
    }
    const bool geometric = xyzw == std::vector<int>{0, 2, 1, 0};
    json out;
    out["group"] = o.name;
    out["rule"] = xyzw;
    out["half"] = o.half;
    if (geometric && !o.half && o.name != "klein55") {
        const auto r = group_lattice_report(o.name);
        out.update(invariants_json(r.invariants));
        out["involutions"] = r.involutions;
        out["all_ones_square"] = integer_json(r.all_ones);
        if (!r.fiber_classes.empty()) {
            json sq = json::array();
            for (const auto& s : r.fiber_squares) sq.push_back(integer_json(s));
            out["fiber_squares"] = sq;
            if (r.fiber_product) out["fiber_product"] = integer_json(*r.fiber_product);
            json cp = json::array();
            for (const auto& s : r.central_pairings) cp.push_back(integer_json(s));
            out["central_pairings"] = cp;
        }
        return out;
    }
    GramMatrix gram = gram_from_group(enumerate_group(o.name), rule);
    if (o.half) gram = half_scale(gram);
    out.update(invariants_json(lattice_invariants(gram)));
    out["involutions"] = gram.size();
    out["all_ones_square"] = integer_json(evaluate_form(gram, std::vector<Integer>(gram.size(), Integer(1))));
    return out;
}

json cmd_survey() {
    json lattices = json::array();
    json low = json::array();
    for (const auto& r : lambda_survey()) {
        lattices.push_back({{"xyzw", r.xyzw}, {"rank", r.rank}});
        if (r.rank <= 25) low.push_back(r.xyzw);
    }
    return {{"lattices", lattices}, {"rank_at_most_25", low}};
}

json cmd_klein() {
    const auto r = klein_report();
    json coords = json::array();
    for (const auto& q : r.incidence_coordinates) coords.push_back(to_string(q));
    return {{"rank", r.rank},
            {"signature", signature_json(r.signature)},
            {"disc_lambda", integer_json(r.disc_lambda)},
            {"disc_lambda_factored", factored_json(r.disc_lambda)},
            {"disc_ns", integer_json(r.disc_ns)},
            {"disc_ns_factored", factored_json(r.disc_ns)},
            {"index", integer_json(r.index)},
            {"incidence_in_lambda", r.incidence_in_lambda},
            {"incidence_coordinates", coords}};
}

json cmd_identities() {
    const auto r = numeric_identities();
    return {{"CD", integer_json(r.CD)},
            {"D2", integer_json(r.D2)},
            {"R2", integer_json(r.R2)},
            {"CR", integer_json(r.CR)},
            {"genusR", integer_json(r.genusR)}};
}

struct CubicsOptions {
    std::string rep;
    std::string chi;
    std::string family;
};

json cmd_invariant_cubics(const CubicsOptions& o) {
    if (o.rep.empty() == o.family.empty()) throw UsageError("invariant-cubics: give exactly one of --rep or --family");
    if (!o.family.empty()) {
        if (!o.chi.empty()) throw UsageError("--chi applies only with --rep");
        const auto r = family_membership_check(o.family);
        return {{"family", r.name},
                {"representation", r.representation},
                {"dimension", r.dimension},
                {"polynomials", r.polynomials},
                {"member", r.member},
                {"all_member", r.all_member}};
    }
    const Representation rep = build_representation(o.rep);
    std::vector<int> chi(rep.group.generators().size(), 1);
    if (!o.chi.empty()) chi = parse_int_list(o.chi, "--chi");
    json basis = json::array();
    for (const auto& b : eigenspace_cubics(rep, std::span<const int>(chi))) basis.push_back(to_string(b));
    return {{"representation", rep.label},
            {"conductor", rep.conductor},
            {"generators", rep.group.generator_names()},
            {"character", chi},
            {"dimension", basis.size()},
            {"basis", basis}};
}

struct SmoothOptions {
    std::string cubic;
    std::string family;
    std::uint64_t seed = 1;
    std::size_t attempts = 20;
};

json cmd_smooth(const SmoothOptions& o) {
    if (o.cubic.empty() == o.family.empty()) throw UsageError("smooth: give exactly one of --cubic or --family");
    if (!o.cubic.empty()) {
        const QPoly f = parse_poly(o.cubic, 5);
        return {{"cubic", to_string(f)}, {"smoothness", to_string(smooth_cubic(f))}};
    }
    const auto r = smoothness_scan(o.family, o.seed, o.attempts);
    json params = json::array();
    for (const auto& p : r.parameters) params.push_back(integer_json(p));
    return {{"family", r.name},
            {"seed", o.seed},
            {"smooth_found", r.smooth_found},
            {"attempts", r.attempts},
            {"parameters", params},
            {"cubic", r.cubic}};
}

struct GammaOptions {
    std::string cubic;
    std::string line;
};

RatMatrix parse_line(const std::string& text) {
    const auto rows = split(text, ';');
    if (rows.size() != 2) throw UsageError("--line: expected two rows separated by ';'");
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (const auto& e : split(r, ',')) {
            try {
                row.push_back(parse_rational(e));
            } catch (const fanocfg::Error&) {
                throw UsageError("--line: bad entry '" + e + "'");
            }
        }
        if (row.size() != 5) throw UsageError("--line: each row needs five entries");
        out.push_back(std::move(row));
    }
    return RatMatrix::from_rows(out);
}

json cmd_gamma(const GammaOptions& o) {
    QPoly f = parse_poly(o.cubic, 5);
    json out;
    if (!o.line.empty()) {
        f = normalize_line_coords(f, parse_line(o.line)).cubic;
        out["normalized_cubic"] = to_string(f);
    }
    const auto nf = line_normal_form(f);
    out["C"] = to_string(nf.C);
    out["Q1"] = to_string(nf.Q1);
    out["Q2"] = to_string(nf.Q2);
    out["ell"] = to_string(nf.ell);
    out["quintic"] = to_string(gamma_quintic(nf));
    const bool harmonic = harmonic_inversion_test(nf);
    out["harmonic"] = harmonic;
    out["classification"] = harmonic ? json(to_string(genus2_classification(nf))) : json(nullptr);
    return out;
}

struct ScanOptions {
    std::uint64_t seed = 1;
    std::size_t samples = 8;
};

json cmd_scan_d4(const ScanOptions& o) {
    const auto r = d4_nonexistence_scan(o.seed, o.samples);
    json cases = json::array();
    for (const auto& c : r.cases) {
        json chars = json::array();
        for (const auto& s : c.characters) {
            json subspace = json::array();
            for (auto k : s.singular_subspace) subspace.push_back("x" + std::to_string(k + 1));
            chars.push_back({{"character", s.character},
                             {"dimension", s.dimension},
                             {"base_singular_point_found", s.base_singular_point_found},
                             {"singular_subspace", subspace},
                             {"samples", s.samples},
                             {"sampled_members_all_singular", s.sampled_members_all_singular},
                             {"smooth_found", s.smooth_found}});
        }
        cases.push_back({{"decomposition", c.decomposition},
                         {"trace_a", c.trace_a},
                         {"trace_a2", c.trace_a2},
                         {"characters", chars}});
    }
    json containment = json::object();
    for (const auto& c : r.containment) containment[std::to_string(c.order)] = c.contains_d4;
    return {{"cases", cases},
            {"containment", containment},
            {"control", {{"family", r.control.name}, {"smooth_found", r.control.smooth_found}}},
            {"no_smooth_cubic", r.no_smooth_cubic}};
}

// ------------------------------------------------------------------ expect

const json* lookup(const json& root, const std::string& path) {
    const json* node = &root;
    for (const auto& key : split(path, '.')) {
        if (node->is_object()) {
            auto it = node->find(key);
            if (it == node->end()) return nullptr;
            node = &*it;
        } else if (node->is_array()) {
            if (key.empty() || !std::all_of(key.begin(), key.end(), ::isdigit)) return nullptr;
            const std::size_t i = std::stoul(key);
            if (i >= node->size()) return nullptr;
            node = &(*node)[i];
        } else {
            return nullptr;
        }
    }
    return node;
}

bool matches(const json& actual, const std::string& expected) {
    if (actual.is_string() && actual.get<std::string>() == expected) return true;
    const json parsed = json::parse(expected, nullptr, false);
    if (parsed.is_discarded()) return false;
    if (parsed == actual) return true;
    // A big integer printed as a string matches an expected plain number.
    return actual.is_string() && parsed.is_number_integer() && parsed.dump() == actual.get<std::string>();
}

int check_expectations(const json& result, const std::vector<std::string>& expects, std::ostream& err) {
    int status = 0;
    for (const auto& e : expects) {
        const auto eq = e.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--expect: expected key=value, got '" + e + "'");
        const std::string key = e.substr(0, eq);
        const std::string value = e.substr(eq + 1);
        const json* actual = lookup(result, key);
        if (actual == nullptr) {
            err << "expect " << key << ": no such key\n";
            status = 1;
        } else if (!matches(*actual, value)) {
            err << "expect " << key << ": expected " << value << ", got " << actual->dump() << "\n";
            status = 1;
        }
    }
    return status;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of genus-2 curve configurations on Fano surfaces", "fano"};
    app.require_subcommand(1);
    std::vector<std::string> expects;
    auto with_expect = [&](CLI::App* sub) {
        sub->add_option("--expect", expects, "Assert key=value on the JSON output (dotted paths)");
        return sub;
    };

    GroupOptions group_opts;
    auto* group = with_expect(app.add_subcommand("group", "Group census or representation trace table"));
    group->add_option("--name", group_opts.name, "z2, dN, a5, psl2_11, klein55");
    group->add_option("--rep", group_opts.rep, "Representation, e.g. d6:V1/6+V2/6+T or a5:std");

    LatticeOptions lattice_opts;
    auto* lattice = with_expect(app.add_subcommand("lattice", "Invariants of a genus-2 lattice"));
    lattice->add_option("--name", lattice_opts.name, "Group name")->capture_default_str();
    lattice->add_option("--rule", lattice_opts.rule, "x,y,z,w pairings at product orders 2,3,5,6");
    lattice->add_flag("--half", lattice_opts.half, "Halve the Gram matrix");

    auto* survey = with_expect(app.add_subcommand("survey", "Ranks of all 81 lattices on PSL2(F_11)"));
    auto* klein = with_expect(app.add_subcommand("klein", "Klein cubic lattice and incidence class"));
    auto* identities = with_expect(app.add_subcommand("identities", "Numeric identities of the genus-2 split"));

    CubicsOptions cubics_opts;
    auto* cubics = with_expect(app.add_subcommand("invariant-cubics", "Character eigenspaces of cubic forms"));
    cubics->add_option("--rep", cubics_opts.rep, "Representation label");
    cubics->add_option("--chi", cubics_opts.chi, "Character values on the generators, e.g. 1,-1");
    cubics->add_option("--family", cubics_opts.family, "Check a displayed family: d2, d3, d5, d6, a5");

    SmoothOptions smooth_opts;
    auto* smooth = with_expect(app.add_subcommand("smooth", "Smoothness of a cubic or a family member"));
    smooth->add_option("--cubic", smooth_opts.cubic, "Cubic in x1..x5");
    smooth->add_option("--family", smooth_opts.family, "d2, d3, d5, d6, a5 or klein");
    smooth->add_option("--seed", smooth_opts.seed, "Random seed")->capture_default_str();
    smooth->add_option("--attempts", smooth_opts.attempts, "Maximum random members")->capture_default_str();

    GammaOptions gamma_opts;
    auto* gamma = with_expect(app.add_subcommand("gamma", "Line normal form and the plane quintic"));
    gamma->add_option("--cubic", gamma_opts.cubic, "Cubic in x1..x5")->required();
    gamma->add_option("--line", gamma_opts.line, "Two spanning points 'a,b,c,d,e;f,g,h,i,j'");

    ScanOptions scan_opts;
    auto* scan = with_expect(app.add_subcommand("scan-d4", "Order-8 dihedral nonexistence scan"));
    scan->add_option("--seed", scan_opts.seed, "Random seed")->capture_default_str();
    scan->add_option("--samples", scan_opts.samples, "Members sampled when no certificate")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        json result;
        if (group->parsed()) result = cmd_group(group_opts);
        else if (lattice->parsed()) result = cmd_lattice(lattice_opts);
        else if (survey->parsed()) result = cmd_survey();
        else if (klein->parsed()) result = cmd_klein();
        else if (identities->parsed()) result = cmd_identities();
        else if (cubics->parsed()) result = cmd_invariant_cubics(cubics_opts);
        else if (smooth->parsed()) result = cmd_smooth(smooth_opts);
        else if (gamma->parsed()) result = cmd_gamma(gamma_opts);
        else if (scan->parsed()) result = cmd_scan_d4(scan_opts);
        out << result.dump(2) << "\n";
        return check_expectations(result, expects, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const fanocfg::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const fanocfg::DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const fanocfg::InvariantViolation& e) {
        err << "internal check failed: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fanocli
