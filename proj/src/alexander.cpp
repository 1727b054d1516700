#include "lassos/alexander.hpp"

#include <cctype>
#include <utility>

#include "lassos/error.hpp"

namespace lassos {

namespace {

Matrix identity_matrix(int n) {
    Matrix m(n, std::vector<Laurent>(n, Laurent::zero(Var::T)));
    for (int i = 0; i < n; ++i) m[i][i] = Laurent::one(Var::T);
    return m;
}

// Reduced Burau image of one braid letter.  It differs from the identity
// only in column i-1 (for generator index i), so the block shapes for the
// first, interior, and last generators collapse to one rule.
Matrix letter_matrix(int n, int letter) {
    const int i = letter > 0 ? letter : -letter;
    const int c = i - 1;
    Matrix m = identity_matrix(n - 1);
    if (letter > 0) {
        if (c - 1 >= 0) m[c - 1][c] = Laurent::term(1, 1, Var::T);
        m[c][c] = Laurent::term(-1, 1, Var::T);
        if (c + 1 <= n - 2) m[c + 1][c] = Laurent::one(Var::T);
    } else {
        if (c - 1 >= 0) m[c - 1][c] = Laurent::one(Var::T);
        m[c][c] = Laurent::term(-1, -1, Var::T);
        if (c + 1 <= n - 2) m[c + 1][c] = Laurent::term(1, -1, Var::T);
    }
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const int n = static_cast<int>(a.size());
    Matrix out(n, std::vector<Laurent>(n, Laurent::zero(Var::T)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Int value_at_one(const Laurent& p) {
    return substitute_power(p, 0).coeff(0);
}

} // namespace

Matrix reduced_burau(const BraidWord& w) {
    validate(w);
    if (w.strands < 2) throw DomainError("reduced Burau needs at least 2 strands");
    Matrix m = identity_matrix(w.strands - 1);
    for (int letter : w.letters) m = mat_mul(m, letter_matrix(w.strands, letter));
    return m;
}

Laurent determinant(Matrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Laurent::one(Var::T);
    Laurent prev = Laurent::one(m[0][0].var());
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m[r][k].is_zero()) { pivot = r; break; }
        if (pivot < 0) return Laurent::zero(prev.var());
        if (pivot != k) { std::swap(m[pivot], m[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = Laurent::zero(prev.var());
        }
        prev = m[k][k];
    }
    Laurent det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Laurent alexander_closure(const BraidWord& w) {
    if (!is_knot(w)) throw DomainError("Alexander polynomial needs a knot closure");
    const int n = w.strands;
    if (n == 1) return Laurent::one(Var::T);

    Matrix m = reduced_burau(w);
    for (int i = 0; i < n - 1; ++i) m[i][i] -= Laurent::one(Var::T);
    const Laurent det = determinant(std::move(m));

    const Laurent one_minus_t = Laurent::one(Var::T) - Laurent::term(1, 1, Var::T);
    const Laurent one_minus_tn = Laurent::one(Var::T) - Laurent::term(1, n, Var::T);
    const Laurent q = exact_divide(det * one_minus_t, one_minus_tn);

    if (q.is_zero()) throw DomainError("Alexander normalization failed: zero polynomial");
    const int span = q.min_exp() + q.max_exp();
    if (span % 2 != 0)
        throw DomainError("Alexander normalization failed: no symmetric centering");
    Laurent p = q * Laurent::term(1, -span / 2, Var::T);
    for (const auto& [e, c] : p.terms())
        if (p.coeff(-e) != c)
            throw DomainError("Alexander normalization failed: not a palindrome");
    const Int at_one = value_at_one(p);
    if (at_one == 1) return p;
    if (at_one == -1) return -p;
    throw DomainError("Alexander normalization failed: value at 1 is not a unit");
}

Laurent satellite_alexander(const SatelliteSpec& s) {
    const Laurent dc = alexander_closure(s.companion);
    if (const auto* l = std::get_if<Lasso>(&s.pattern))
        return substitute_power(dc, winding(*l));
    const auto& b = std::get<BraidWord>(s.pattern);
    return substitute_power(dc, b.strands) * alexander_closure(b);
}

Laurent connected_sum_alexander(const std::vector<Laurent>& parts) {
    Laurent out = Laurent::one(Var::T);
    for (const Laurent& p : parts) out *= p;
    return out;
}

Lasso canonical_lasso(int degree) {
    if (degree < 0) throw DomainError("realizable powers are nonnegative");
    if (degree == 0) return Lasso{{2}};
    if (degree == 1) return Lasso{{1, 2}};
    return Lasso{std::vector<int>(degree - 1, 1)};
}

Recipe realize_spec(const std::vector<AlexanderSpecTerm>& spec,
                    bool proper_satellites,
                    const std::optional<Lasso>& lasso_override) {
    Recipe out;
    out.target = Laurent::one(Var::T);

    int override_degree = -1;
    bool override_used = false;
    if (lasso_override) override_degree = winding(*lasso_override);

    std::vector<Laurent> parts;
    for (const AlexanderSpecTerm& term : spec) {
        if (term.power < 0) throw DomainError("realizable powers are nonnegative");
        const Laurent dk = alexander_closure(term.braid);
        out.target *= substitute_power(dk, term.power);

        RecipeItem item;
        item.knot_name = term.name.empty() ? to_string(term.braid) : term.name;
        item.knot = term.braid;
        item.power = term.power;
        if (lasso_override && term.power == override_degree) {
            item.is_satellite = true;
            item.lasso = *lasso_override;
            override_used = true;
        } else if (term.power == 1 && !proper_satellites) {
            item.is_satellite = false;
        } else {
            item.is_satellite = true;
            item.lasso = canonical_lasso(term.power);
        }
        parts.push_back(item.is_satellite
                            ? satellite_alexander({item.lasso, item.knot})
                            : dk);
        out.items.push_back(std::move(item));
    }

    if (lasso_override && !override_used)
        throw DomainError("lasso override has degree " +
                          std::to_string(override_degree) +
                          ", which matches no factor's power");

    out.realized = connected_sum_alexander(parts);
    out.certified = out.target == out.realized;

    if (out.items.empty()) {
        out.text = "unknot";
    } else {
        for (std::size_t i = 0; i < out.items.size(); ++i) {
            const RecipeItem& it = out.items[i];
            if (i) out.text += " # ";
            out.text += it.is_satellite
                            ? "Sat(" + to_string(it.lasso) + "," + it.knot_name + ")"
                            : it.knot_name;
        }
    }
    return out;
}

namespace {

struct SpecCursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(i) + " in \"" + s + "\"");
    }

    int integer() {
        if (done() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected a number");
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) fail("number too large");
            ++i;
        }
        return static_cast<int>(v);
    }

    std::string name() {
        const std::size_t start = i;
        while (!done() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (i == start) fail("expected a knot name");
        return s.substr(start, i - start);
    }
};

} // namespace

std::vector<AlexanderSpecTerm> parse_alexander_spec(
    const std::string& text,
    const std::function<BraidWord(const std::string&)>& resolver) {
    std::vector<AlexanderSpecTerm> out;
    SpecCursor c{text};
    c.skip_ws();
    if (c.done()) return out;

    while (true) {
        const std::string name = c.name();
        int mult = 1, power = 1;
        bool saw_mult = false, saw_power = false;
        while (!c.done() && (c.peek() == '^' || c.peek() == '@')) {
            const char tag = c.peek();
            ++c.i;
            if (tag == '^') {
                if (saw_mult) c.fail("duplicate multiplicity");
                saw_mult = true;
                mult = c.integer();
            } else {
                if (saw_power) c.fail("duplicate power");
                saw_power = true;
                power = c.integer();
            }
        }
        const BraidWord braid = resolver(name);
        for (int k = 0; k < mult; ++k) out.push_back({name, braid, power});

        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '*') c.fail("expected '*' between factors");
        ++c.i;
        c.skip_ws();
        if (c.done()) c.fail("dangling '*'");
    }
    return out;
}

} // namespace lassos
