#include "lassos/jsonio.hpp"

#include "lassos/error.hpp"

namespace lassos {

namespace {

Var var_from_name(const std::string& s) {
    if (s == "A") return Var::A;
    if (s == "u") return Var::U;
    if (s == "t") return Var::T;
    throw ParseError("unknown variable tag \"" + s + "\"");
}

[[noreturn]] void malformed(const std::string& what) {
    throw ParseError("malformed JSON: " + what);
}

} // namespace

nlohmann::json laurent_to_json(const Laurent& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({it->first, it->second.str()});
    return {{"var", var_name(p.var())}, {"terms", std::move(terms)}};
}

Laurent laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("var") || !j.contains("terms"))
        malformed("polynomial needs \"var\" and \"terms\"");
    const Var v = var_from_name(j.at("var").get<std::string>());
    Laurent out = Laurent::zero(v);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) malformed("term must be [exp, \"coeff\"]");
        const int e = t.at(0).get<int>();
        const Int c(t.at(1).get<std::string>());
        out += Laurent::term(c, e, v);
    }
    return out;
}

nlohmann::json skein_to_json(const SkeinElement& x) {
    nlohmann::json basis = nlohmann::json::object();
    for (const auto& [k, coeff] : x.terms())
        basis[std::to_string(k)] = laurent_to_json(coeff).at("terms");
    return {{"var", var_name(x.var())}, {"basis", std::move(basis)}};
}

SkeinElement skein_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("var") || !j.contains("basis"))
        malformed("skein element needs \"var\" and \"basis\"");
    const Var v = var_from_name(j.at("var").get<std::string>());
    SkeinElement out;
    for (const auto& [key, terms] : j.at("basis").items()) {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size() || k < 0) malformed("basis index \"" + key + "\"");
        out.set(k, laurent_from_json({{"var", var_name(v)}, {"terms", terms}}));
    }
    return out;
}

nlohmann::json braid_to_json(const BraidWord& w) {
    return {{"strands", w.strands}, {"letters", w.letters}};
}

BraidWord braid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("strands") || !j.contains("letters"))
        malformed("braid needs \"strands\" and \"letters\"");
    BraidWord w;
    w.strands = j.at("strands").get<int>();
    w.letters = j.at("letters").get<std::vector<int>>();
    validate(w);
    return w;
}

} // namespace lassos
