#include "lassos/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "lassos/alexander.hpp"
#include "lassos/error.hpp"
#include "lassos/jsonio.hpp"

namespace lassos {

namespace {

CatalogEntry make_entry(const std::string& name, const std::string& braid,
                        const std::string& alexander, const std::string& jones,
                        const std::string& notes) {
    return {name, parse_braid(braid), parse_laurent(alexander, Var::T),
            parse_laurent(jones, Var::U), notes};
}

} // namespace

Catalog Catalog::builtin() {
    Catalog c;
    c.entries_ = {
        make_entry("3_1", "B2: -1 -1 -1",
                   "t - 1 + t^-1",
                   "-t^-4 + t^-3 + t^-1",
                   "left-handed trefoil"),
        make_entry("4_1", "B3: 1 -2 1 -2",
                   "-t + 3 - t^-1",
                   "t^-2 - t^-1 + 1 - t + t^2",
                   "figure-eight knot"),
        make_entry("5_1", "B2: -1 -1 -1 -1 -1",
                   "t^2 - t + 1 - t^-1 + t^-2",
                   "-t^-7 + t^-6 - t^-5 + t^-4 + t^-2",
                   "left-handed (2,5) torus knot"),
        make_entry("8_19", "B3: 1 2 1 2 1 2 1 2",
                   "t^3 - t^2 + 1 - t^-2 + t^-3",
                   "t^3 + t^5 - t^8",
                   "right-handed (3,4) torus knot"),
        make_entry("10_161", "B3: 1 1 1 2 -1 2 1 1 2 2",
                   "t^3 - 2t + 3 - 2t^-1 + t^-3",
                   "t^3 + t^6 - t^7 + t^8 - t^9 + t^10 - t^11",
                   "chirality fixed by this braid word; validated internally"),
    };
    return c;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open catalog file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("catalog file " + path + ": " + e.what());
    }
    if (!j.is_object() || j.value("version", 0) != 1)
        throw ParseError("catalog file " + path + ": expected {\"version\":1,...}");
    Catalog c;
    for (const auto& k : j.at("knots")) {
        CatalogEntry e;
        e.name = k.at("name").get<std::string>();
        e.braid = braid_from_json(k.at("braid"));
        e.alexander = parse_laurent(k.at("alexander").get<std::string>(), Var::T);
        e.jones = parse_laurent(k.at("jones").get<std::string>(), Var::U);
        e.notes = k.value("notes", std::string{});
        c.entries_.push_back(std::move(e));
    }
    return c;
}

Catalog Catalog::from_env_or_builtin() {
    if (const char* path = std::getenv("LASSOS_CATALOG")) return load(path);
    return builtin();
}

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

const CatalogEntry& Catalog::at(const std::string& name) const {
    if (const CatalogEntry* e = find(name)) return *e;
    std::string known;
    for (const auto& e : entries_) {
        if (!known.empty()) known += ", ";
        known += e.name;
    }
    throw DomainError("unknown knot \"" + name + "\" (catalog has: " + known + ")");
}

BraidWord Catalog::resolve(const std::string& text) const {
    if (const CatalogEntry* e = find(text)) return e->braid;
    if (text.find(':') != std::string::npos) return parse_braid(text);
    return at(text).braid; // throws with the catalog listing
}

std::function<BraidWord(const std::string&)> Catalog::resolver() const {
    return [c = *this](const std::string& text) { return c.resolve(text); };
}

std::string verify_entry(const CatalogEntry& e) {
    const Laurent a = alexander_closure(e.braid);
    if (a != e.alexander)
        return e.name + ": Alexander mismatch: computed " + to_string(a) +
               ", cataloged " + to_string(e.alexander);
    const Laurent j = jones_closure(e.braid);
    if (j != e.jones)
        return e.name + ": Jones mismatch: computed " + to_string(j) +
               ", cataloged " + to_string(e.jones);
    return {};
}

} // namespace lassos
