#include "fanocfg/mpoly.hpp"

#include <algorithm>

namespace fanocfg {

namespace {

void fill(std::vector<Monomial>& out, Monomial& cur, std::size_t var, std::size_t nvars, unsigned left) {
    if (var + 1 == nvars) {
        cur.exp[var] = static_cast<std::uint16_t>(left);
        out.push_back(cur);
        cur.exp[var] = 0;
        return;
    }
    for (unsigned e = 0; e <= left; ++e) {
        cur.exp[var] = static_cast<std::uint16_t>(e);
        fill(out, cur, var + 1, nvars, left - e);
    }
    cur.exp[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    if (nvars == 0 || nvars > kMaxVars) throw DomainError("monomials_of_degree: bad variable count");
    std::vector<Monomial> out;
    Monomial cur;
    fill(out, cur, 0, nvars, degree);
    std::sort(out.begin(), out.end(), DegRevLexGreater{});
    return out;
}

} // namespace fanocfg
