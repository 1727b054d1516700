#include "lassos/satellite.hpp"

#include "lassos/alexander.hpp"
#include "lassos/error.hpp"

namespace lassos {

std::string to_string(const Pattern& p) {
    if (const auto* l = std::get_if<Lasso>(&p)) return to_string(*l);
    return to_string(std::get<BraidWord>(p));
}

int pattern_writhe(const Pattern& p) {
    if (const auto* l = std::get_if<Lasso>(&p)) return writhe(*l);
    return exponent_sum(std::get<BraidWord>(p));
}

SkeinElement pattern_bracket(const Pattern& p) {
    if (const auto* l = std::get_if<Lasso>(&p)) return bracket(*l);
    return bracket_annulus(std::get<BraidWord>(p));
}

SkeinElement pattern_jones_st(const Pattern& p) {
    if (const auto* l = std::get_if<Lasso>(&p)) return jones_st(*l);
    const auto& b = std::get<BraidWord>(p);
    SkeinElement br = bracket_annulus(b);
    br *= framing_factor(exponent_sum(b));
    return to_jones_variable(br);
}

long cable_writhe(int k, int n, int w) {
    return static_cast<long>(k) * k * w + static_cast<long>(n) * k * (k - 1) / 2;
}

int pattern_degree(const Pattern& p) { return geometric_degree(pattern_bracket(p)); }

long satellite_writhe(const SatelliteSpec& s) {
    const int m = pattern_degree(s.pattern);
    return pattern_writhe(s.pattern) + static_cast<long>(m) * exponent_sum(s.companion);
}

Laurent satellite_bracket(const SatelliteSpec& s) {
    const SkeinElement pb = pattern_bracket(s.pattern);
    const int m = geometric_degree(pb);
    const int wc = exponent_sum(s.companion);
    const Laurent shift = framing_factor(-wc);
    Laurent out = Laurent::zero(Var::A);
    for (const auto& [k, coeff] : pb.terms()) {
        Laurent image = k == 0 ? Laurent::one(Var::A)
                               : bracket_sphere(zero_framed_cable(s.companion, k));
        out += coeff * pow(shift, m - k) * image;
    }
    return out;
}

Laurent satellite_jones(const SatelliteSpec& s) {
    const SkeinElement pj = pattern_jones_st(s.pattern);
    const BraidWord c = s.companion;
    return substitute_basis(pj, [&c](int k) { return parallel_jones(c, k); });
}

Laurent satellite_jones_via_bracket(const SatelliteSpec& s) {
    Laurent br = satellite_bracket(s);
    br *= framing_factor(static_cast<int>(satellite_writhe(s)));
    return to_jones_variable(br);
}

CompanionCheck thm1_condition(const BraidWord& companion) {
    CompanionCheck out;
    out.alexander = alexander_closure(companion);
    out.alexander_nontrivial = out.alexander != Laurent::one(Var::T);
    out.observed = parallel_jones(companion, 2);
    out.reference = delta(Var::U);
    out.jones_differs = out.observed != out.reference;
    out.holds = out.alexander_nontrivial && out.jones_differs;
    return out;
}

CompanionCheck thm2_condition(const BraidWord& companion) {
    CompanionCheck out;
    out.alexander = alexander_closure(companion);
    out.alexander_nontrivial = out.alexander != Laurent::one(Var::T);
    out.observed = parallel_jones(companion, 3);
    out.reference = jones_closure(companion) * delta(Var::U) * delta(Var::U);
    out.jones_differs = out.observed != out.reference;
    out.holds = out.alexander_nontrivial && out.jones_differs;
    return out;
}

DistinguishReport distinguish(const Lasso& p1, const Lasso& p2, const BraidWord& companion) {
    DistinguishReport rep;
    rep.pattern1 = p1;
    rep.pattern2 = p2;
    rep.companion = companion;
    const SatelliteSpec s1{p1, companion};
    const SatelliteSpec s2{p2, companion};
    rep.alexander1 = satellite_alexander(s1);
    rep.alexander2 = satellite_alexander(s2);
    rep.jones1 = satellite_jones(s1);
    rep.jones2 = satellite_jones(s2);
    if (rep.alexander1 != rep.alexander2)
        rep.verdict = "distinguished-by-Alexander";
    else if (rep.jones1 != rep.jones2)
        rep.verdict = "distinguished-by-Jones";
    else
        rep.verdict = "not-distinguished";
    return rep;
}

} // namespace lassos
