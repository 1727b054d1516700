#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lassos/alexander.hpp"
#include "lassos/catalog.hpp"
#include "lassos/error.hpp"
#include "lassos/jsonio.hpp"
#include "lassos/satellite.hpp"

namespace {

using nlohmann::json;
using namespace lassos;

Pattern parse_pattern(const std::string& s) {
    if (!s.empty() && s[0] == 'L') return parse_lasso(s);
    if (s.find(':') != std::string::npos) return parse_braid(s);
    throw ParseError("pattern must be a lasso \"L(...)\" or a braid \"Bn: ...\"");
}

// "L(1,r)" with values {2,4} -> { L(1,2), L(1,4) }.
std::vector<Lasso> expand_family(const std::string& family, const std::vector<int>& values) {
    std::string inner = family;
    while (!inner.empty() && std::isspace(static_cast<unsigned char>(inner.back())))
        inner.pop_back();
    if (inner.size() < 3 || inner[0] != 'L' || inner[1] != '(' || inner.back() != ')')
        throw ParseError("family must look like \"L(1,r)\"");
    inner = inner.substr(2, inner.size() - 3);

    std::vector<Lasso> out;
    for (int v : values) {
        Lasso l;
        std::string tok;
        const auto flush = [&](const std::string& t) {
            std::string s;
            for (char ch : t)
                if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
            if (s == "r")
                l.twists.push_back(v);
            else if (!s.empty())
                l.twists.push_back(std::stoi(s));
            else
                throw ParseError("empty entry in family \"" + family + "\"");
        };
        for (char ch : inner) {
            if (ch == ',') {
                flush(tok);
                tok.clear();
            } else {
                tok += ch;
            }
        }
        flush(tok);
        out.push_back(std::move(l));
    }
    return out;
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int run_lasso(const std::string& action, const std::string& text, bool as_json) {
    const Lasso l = parse_lasso(text);
    if (action == "degree") {
        emit(as_json, {{"lasso", to_string(l)}, {"degree", winding(l)}},
             std::to_string(winding(l)));
    } else if (action == "writhe") {
        emit(as_json, {{"lasso", to_string(l)}, {"writhe", writhe(l)}},
             std::to_string(writhe(l)));
    } else if (action == "bracket") {
        const SkeinElement b = bracket(l);
        emit(as_json, {{"lasso", to_string(l)}, {"bracket", skein_to_json(b)}},
             to_string(b));
    } else if (action == "jones-st") {
        const SkeinElement j = jones_st(l);
        emit(as_json, {{"lasso", to_string(l)}, {"jones_st", skein_to_json(j)}},
             to_string(j));
    } else if (action == "normalize") {
        const Lasso n = normalize(l);
        emit(as_json, {{"lasso", to_string(l)}, {"normalized", to_string(n)}},
             to_string(n));
    } else {
        throw ParseError("unknown lasso action \"" + action +
                         "\" (degree|writhe|bracket|jones-st|normalize)");
    }
    return 0;
}

int run_knot(const std::string& action, const std::string& name, std::optional<int> k,
             const Catalog& cat, bool as_json) {
    const BraidWord w = cat.resolve(name);
    json base{{"knot", name}, {"braid", braid_to_json(w)}};
    if (action == "jones") {
        const Laurent j = jones_closure(w);
        base["jones"] = laurent_to_json(j);
        emit(as_json, base, to_string(j));
    } else if (action == "alexander") {
        const Laurent a = alexander_closure(w);
        base["alexander"] = laurent_to_json(a);
        emit(as_json, base, to_string(a));
    } else if (action == "bracket") {
        const Laurent b = bracket_sphere(w);
        base["bracket"] = laurent_to_json(b);
        emit(as_json, base, to_string(b));
    } else if (action == "parallel-jones") {
        if (!k) throw ParseError("parallel-jones needs --k");
        const Laurent j = parallel_jones(w, *k);
        base["k"] = *k;
        base["parallel_jones"] = laurent_to_json(j);
        emit(as_json, base, to_string(j));
    } else {
        throw ParseError("unknown knot action \"" + action +
                         "\" (jones|alexander|bracket|parallel-jones)");
    }
    return 0;
}

int run_sat(const std::string& action, const std::string& pattern_text,
            const std::string& companion_text, bool verify, const std::string& family,
            const std::string& r_list, const Catalog& cat, bool as_json) {
    const BraidWord companion = cat.resolve(companion_text);

    if (action == "distinguish") {
        std::vector<int> rs;
        std::string tok;
        for (char ch : r_list + ",") {
            if (ch == ',') {
                if (!tok.empty()) rs.push_back(std::stoi(tok));
                tok.clear();
            } else {
                tok += ch;
            }
        }
        if (rs.size() != 2) throw ParseError("--r needs exactly two values, e.g. --r 2,4");
        const std::vector<Lasso> pair = expand_family(family, rs);
        const DistinguishReport rep = distinguish(pair[0], pair[1], companion);
        json j{{"pattern", {to_string(rep.pattern1), to_string(rep.pattern2)}},
               {"companion", companion_text},
               {"alexander", {to_string(rep.alexander1), to_string(rep.alexander2)}},
               {"jones", {to_string(rep.jones1), to_string(rep.jones2)}},
               {"verdict", rep.verdict}};
        std::string text;
        text += "pattern 1:   " + to_string(rep.pattern1) + "\n";
        text += "pattern 2:   " + to_string(rep.pattern2) + "\n";
        text += "companion:   " + companion_text + "\n";
        text += "alexander 1: " + to_string(rep.alexander1) + "\n";
        text += "alexander 2: " + to_string(rep.alexander2) + "\n";
        text += "jones 1:     " + to_string(rep.jones1) + "\n";
        text += "jones 2:     " + to_string(rep.jones2) + "\n";
        text += "verdict:     " + rep.verdict;
        emit(as_json, j, text);
        return 0;
    }

    const SatelliteSpec s{parse_pattern(pattern_text), companion};
    if (action == "jones") {
        const Laurent j = satellite_jones(s);
        json out{{"pattern", to_string(s.pattern)},
                 {"companion", companion_text},
                 {"jones", laurent_to_json(j)}};
        if (verify) {
            const Laurent j2 = satellite_jones_via_bracket(s);
            out["verify"] = {{"agrees", j == j2}, {"via_bracket", to_string(j2)}};
            if (j != j2) {
                std::cerr << "route mismatch: " << to_string(j) << " vs "
                          << to_string(j2) << "\n";
                return 1;
            }
        }
        emit(as_json, out, to_string(j));
    } else if (action == "alexander") {
        const Laurent a = satellite_alexander(s);
        emit(as_json,
             {{"pattern", to_string(s.pattern)},
              {"companion", companion_text},
              {"alexander", laurent_to_json(a)}},
             to_string(a));
    } else if (action == "bracket") {
        const Laurent b = satellite_bracket(s);
        emit(as_json,
             {{"pattern", to_string(s.pattern)},
              {"companion", companion_text},
              {"bracket", laurent_to_json(b)}},
             to_string(b));
    } else if (action == "report") {
        const Laurent j = satellite_jones(s);
        const Laurent a = satellite_alexander(s);
        const int m = pattern_degree(s.pattern);
        const long w = satellite_writhe(s);
        json out{{"pattern", to_string(s.pattern)},
                 {"companion", companion_text},
                 {"M", m},
                 {"writhe", w},
                 {"jones", to_string(j)},
                 {"alexander", to_string(a)}};
        std::string text;
        text += "pattern:   " + to_string(s.pattern) + "\n";
        text += "companion: " + companion_text + "\n";
        text += "M:         " + std::to_string(m) + "\n";
        text += "writhe:    " + std::to_string(w) + "\n";
        text += "jones:     " + to_string(j) + "\n";
        text += "alexander: " + to_string(a);
        if (verify) {
            const Laurent j2 = satellite_jones_via_bracket(s);
            out["verify"] = {{"agrees", j == j2}, {"via_bracket", to_string(j2)}};
            text += "\nverify:    " +
                    std::string(j == j2 ? "both Jones routes agree" : "ROUTE MISMATCH");
            if (j != j2) {
                emit(as_json, out, text);
                return 1;
            }
        }
        emit(as_json, out, text);
    } else {
        throw ParseError("unknown sat action \"" + action +
                         "\" (report|jones|alexander|bracket|distinguish)");
    }
    return 0;
}

int run_realize(const std::string& spec_text, const std::string& lasso_text,
                bool proper_satellites, const Catalog& cat, bool as_json) {
    const std::vector<AlexanderSpecTerm> spec =
        parse_alexander_spec(spec_text, cat.resolver());
    std::optional<Lasso> override_lasso;
    if (!lasso_text.empty()) override_lasso = parse_lasso(lasso_text);
    const Recipe r = realize_spec(spec, proper_satellites, override_lasso);

    json items = json::array();
    for (const RecipeItem& it : r.items) {
        json ji{{"knot", it.knot_name}, {"power", it.power}, {"satellite", it.is_satellite}};
        if (it.is_satellite) ji["lasso"] = to_string(it.lasso);
        items.push_back(std::move(ji));
    }
    json out{{"recipe", r.text},
             {"items", std::move(items)},
             {"target", to_string(r.target)},
             {"realized", to_string(r.realized)},
             {"certified", r.certified}};
    std::string text;
    text += "recipe:    " + r.text + "\n";
    text += "target:    " + to_string(r.target) + "\n";
    text += "realized:  " + to_string(r.realized) + "\n";
    text += "certified: " + std::string(r.certified ? "yes" : "NO");
    emit(as_json, out, text);
    return r.certified ? 0 : 1;
}

struct Check {
    std::string name;
    std::string computed;
    std::string expected;
    bool ok;
};

void add_poly_check(std::vector<Check>& cs, const std::string& name, const Laurent& got,
                    const Laurent& want) {
    cs.push_back({name, to_string(got), to_string(want), got == want});
}

void add_skein_check(std::vector<Check>& cs, const std::string& name,
                     const SkeinElement& got, const SkeinElement& want) {
    cs.push_back({name, to_string(got), to_string(want), got == want});
}

// Recompute the catalog expectations and the worked values that anchor the
// machinery, all compared exactly.
int run_self_test(const Catalog& cat, bool as_json) {
    std::vector<Check> cs;

    for (const CatalogEntry& e : cat.entries()) {
        const std::string msg = verify_entry(e);
        cs.push_back({"catalog " + e.name, msg.empty() ? "recomputed" : msg,
                      "recomputed", msg.empty()});
    }

    const BraidWord core3{2, {-1, -1, -1}};

    SkeinElement annular_expected;
    annular_expected.set(0, parse_laurent("A^7 - A^3 + A^-1", Var::A));
    annular_expected.set(2, parse_laurent("A^-3", Var::A));
    add_skein_check(cs, "annular bracket of the 3-crossing core pattern",
                    bracket_annulus(core3), annular_expected);

    add_poly_check(cs, "planar bracket matches the embedded annular bracket",
                   bracket_sphere(core3), embed_to_s3(bracket_annulus(core3)));
    add_poly_check(cs, "planar bracket of the 3-crossing word",
                   bracket_sphere(core3), parse_laurent("A^7 - A^3 - A^-5", Var::A));

    const Catalog builtin = Catalog::builtin();
    const BraidWord b41 = builtin.at("4_1").braid;
    add_poly_check(cs, "0-framed 2-cable bracket of 4_1",
                   bracket_sphere(zero_framed_cable(b41, 2)),
                   parse_laurent("-A^26 + A^22 - A^2 - A^-2 + A^-22 - A^-26", Var::A));

    const SatelliteSpec sat41{Pattern{core3}, b41};
    add_poly_check(cs, "satellite bracket, core pattern through 4_1",
                   satellite_bracket(sat41),
                   parse_laurent("-A^23 + A^19 + A^7 - A^3 - A^-5 + A^-25 - A^-29", Var::A));
    add_poly_check(cs, "satellite Jones, core pattern through 4_1",
                   satellite_jones(sat41),
                   parse_laurent("t^-8 - t^-7 - t^-4 + t^-3 + t^-1 - t^4 + t^5", Var::U));

    const BraidWord b31 = builtin.at("3_1").braid;
    add_poly_check(cs, "2-parallel Jones of 3_1", parallel_jones(b31, 2),
                   parse_laurent("-t^-23/2 + t^-21/2 + t^-17/2 - t^-9/2 - t^-5/2 - t^-1/2",
                                 Var::U));

    SkeinElement jst2;
    jst2.set(0, parse_laurent("t^-2", Var::U));
    jst2.set(2, parse_laurent("t^-3/2 - t^-1/2", Var::U));
    add_skein_check(cs, "solid-torus Jones of L(2)", jones_st(Lasso{{2}}), jst2);

    add_poly_check(cs, "Alexander of Sat(L(1,2),3_1)",
                   satellite_alexander({Lasso{{1, 2}}, b31}),
                   parse_laurent("t - 1 + t^-1", Var::T));
    add_poly_check(cs, "Alexander of Sat(L(2),3_1)",
                   satellite_alexander({Lasso{{2}}, b31}), Laurent::one(Var::T));
    add_poly_check(cs, "Alexander of Sat(L(4),3_1)",
                   satellite_alexander({Lasso{{4}}, b31}), Laurent::one(Var::T));

    add_skein_check(cs, "bracket of L(0)", bracket(Lasso{{0}}), SkeinElement::basis(0));
    add_skein_check(cs, "bracket of L()", bracket(Lasso{}), SkeinElement::basis(1));

    const Recipe rec =
        realize_spec(parse_alexander_spec("5_1^2 * 8_19@3", builtin.resolver()));
    cs.push_back({"realize 5_1^2 * 8_19@3", rec.text + (rec.certified ? ", certified" : ", NOT certified"),
                  "5_1 # 5_1 # Sat(L(1,1),8_19), certified",
                  rec.text == "5_1 # 5_1 # Sat(L(1,1),8_19)" && rec.certified});

    bool all_ok = true;
    json checks = json::array();
    std::string text;
    for (const Check& c : cs) {
        all_ok = all_ok && c.ok;
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"computed", c.computed},
                          {"expected", c.expected}});
        text += (c.ok ? "ok:   " : "FAIL: ") + c.name;
        if (!c.ok) text += " (computed " + c.computed + ", expected " + c.expected + ")";
        text += "\n";
    }
    text += all_ok ? "self-test passed" : "self-test FAILED";
    emit(as_json, {{"ok", all_ok}, {"checks", std::move(checks)}}, text);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman bracket, Jones, and Alexander invariants of lassos, "
                 "braid closures, and satellites"};
    app.require_subcommand(0, 1);
    bool as_json = false;
    bool self_test = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_flag("--self-test", self_test, "recompute catalog and anchor values");

    std::string action, arg, k_name, pattern, companion, family, r_list, lasso_override;
    std::optional<int> kk;
    bool verify = false, proper = false;

    CLI::App* lasso_cmd = app.add_subcommand("lasso", "lasso invariants");
    lasso_cmd->add_option("action", action, "degree|writhe|bracket|jones-st|normalize")
        ->required();
    lasso_cmd->add_option("lasso", arg, "e.g. \"L(1,2)\"")->required();
    lasso_cmd->fallthrough();

    CLI::App* knot_cmd = app.add_subcommand("knot", "invariants of braid closures");
    knot_cmd->add_option("action", action, "jones|alexander|bracket|parallel-jones")
        ->required();
    knot_cmd->add_option("knot", k_name, "catalog name or \"Bn: ...\"")->required();
    int k_value = 0;
    CLI::Option* k_opt = knot_cmd->add_option("--k", k_value, "number of parallel copies");
    knot_cmd->fallthrough();

    CLI::App* sat_cmd = app.add_subcommand("sat", "satellite invariants");
    sat_cmd->add_option("action", action, "report|jones|alexander|bracket|distinguish")
        ->required();
    sat_cmd->add_option("--pattern", pattern, "lasso or annular braid");
    sat_cmd->add_option("--companion", companion, "catalog name or braid")->required();
    sat_cmd->add_flag("--verify", verify, "run both Jones routes and compare");
    sat_cmd->add_option("--family", family, "lasso family, e.g. \"L(r)\"");
    sat_cmd->add_option("--r", r_list, "two family values, e.g. 2,4");
    sat_cmd->fallthrough();

    CLI::App* realize_cmd = app.add_subcommand("realize", "build a knot with a requested Alexander polynomial");
    realize_cmd->add_option("spec", arg, "e.g. \"5_1^2 * 8_19@3\"");
    realize_cmd->add_option("--lasso", lasso_override,
                            "use this lasso for factors whose power equals its degree");
    realize_cmd->add_flag("--proper-satellites", proper,
                          "realize power-1 factors as Sat(L(1,2),K) instead of K");
    realize_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints message or help text
        return code == 0 ? 0 : 2;
    }

    try {
        const Catalog cat = Catalog::from_env_or_builtin();
        if (lasso_cmd->parsed()) return run_lasso(action, arg, as_json);
        if (knot_cmd->parsed()) {
            if (k_opt->count()) kk = k_value;
            return run_knot(action, k_name, kk, cat, as_json);
        }
        if (sat_cmd->parsed())
            return run_sat(action, pattern, companion, verify, family, r_list, cat, as_json);
        if (realize_cmd->parsed())
            return run_realize(arg, lasso_override, proper, cat, as_json);
        if (self_test) return run_self_test(cat, as_json);
        std::cout << app.help();
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
