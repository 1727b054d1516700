#include "lassos/lasso.hpp"

#include <cctype>
#include <map>

namespace lassos {

std::string to_string(const Lasso& l) {
    std::string out = "L(";
    for (size_t i = 0; i < l.twists.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(l.twists[i]);
    }
    return out + ")";
}

Lasso parse_lasso(const std::string& text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("expected '") + c + "' in lasso literal");
        ++i;
    };
    expect('L');
    expect('(');
    Lasso l;
    skip();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        while (true) {
            skip();
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected integer in lasso literal");
            int v = std::stoi(text.substr(start, i - start));
            l.twists.push_back(neg ? -v : v);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            expect(')');
            break;
        }
    }
    skip();
    if (i != text.size()) throw ParseError("trailing input after lasso literal");
    return l;
}

int writhe(const Lasso& l) {
    int s = 0;
    for (int r : l.twists) s += r;
    return -s;
}

int degree(const Lasso& l) {
    int sum = 1; // contribution of the innermost ring
    int prev = 1;
    for (int r : l.twists) {
        if (r == 0) throw DomainError("degree needs a zero-free twist vector");
        int cur = (prev == 1) ? (r % 2 != 0 ? 1 : -1) : 1;
        sum += cur;
        prev = cur;
    }
    return sum;
}

int winding(const Lasso& l) {
    const Lasso n = normalize(l);
    if (n.twists == std::vector<int>{0}) return 0;
    return degree(n);
}

Lasso reverse(const Lasso& l) {
    return Lasso{{l.twists.rbegin(), l.twists.rend()}};
}

Lasso normalize(const Lasso& l) {
    std::vector<int> r = l.twists;
    bool changed = true;
    while (changed) {
        changed = false;
        const size_t m = r.size();
        if (m >= 2 && r[0] == 0) {
            r.erase(r.begin(), r.begin() + 2);
            changed = true;
            continue;
        }
        for (size_t i = 1; i + 1 < m; ++i) {
            if (r[i] == 0) {
                r[i - 1] += r[i + 1];
                r.erase(r.begin() + i, r.begin() + i + 2);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        if (m >= 2 && r[m - 1] == 0) {
            r.erase(r.end() - 2, r.end());
            changed = true;
        }
    }
    return Lasso{std::move(r)};
}

namespace {

using Memo = std::map<std::vector<int>, SkeinElement>;

const Laurent kA = Laurent::term(1, 1, Var::A);
const Laurent kAinv = Laurent::term(1, -1, Var::A);

SkeinElement bracket_rec(const std::vector<int>& r, Memo& memo) {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;

    SkeinElement out;
    if (r.empty()) {
        out = SkeinElement::basis(1);
    } else if (r[0] == 0) {
        if (r.size() == 1) {
            out = SkeinElement::basis(0);
        } else {
            // Unlinked innermost ring: the r_2 clasps unwind into curls.
            std::vector<int> rest(r.begin() + 2, r.end());
            out = framing_factor(r[1]) * bracket_rec(rest, memo);
        }
    } else {
        const bool pos = r[0] > 0;
        std::vector<int> peeled = r;
        peeled[0] += pos ? -1 : 1;
        std::vector<int> rest(r.begin() + 1, r.end());
        SkeinElement smoothed = SkeinElement::basis(1) * bracket_rec(rest, memo);
        smoothed *= framing_factor(peeled[0]);
        out = (pos ? kA : kAinv) * bracket_rec(peeled, memo) + (pos ? kAinv : kA) * smoothed;
    }
    memo.emplace(r, out);
    return out;
}

} // namespace

SkeinElement bracket(const Lasso& l) {
    Memo memo;
    return bracket_rec(l.twists, memo);
}

SkeinElement closed_form_simple(int r) {
    if (r == 0) throw DomainError("closed form needs r != 0");
    if (r < 0) return mirror(closed_form_simple(-r));
    Laurent sum(Var::A);
    for (int i = 1; i <= r; ++i) sum += Laurent::term(i % 2 != 0 ? -1 : 1, 4 * i - 2, Var::A);
    SkeinElement out;
    out.set(0, Laurent::term(1, r, Var::A));
    out.set(2, framing_factor(r) * sum);
    return out;
}

SkeinElement jones_st(const Lasso& l) {
    return to_jones_variable(framing_factor(writhe(l)) * bracket(l));
}

namespace {

// (1 - (-t)^-r) / (t + 1) in the u variable, exact for every r > 0.
Laurent alternating_quotient(int r) {
    Laurent num = Laurent::one(Var::U) - Laurent::term(r % 2 != 0 ? -1 : 1, -2 * r, Var::U);
    Laurent den = Laurent::term(1, 2, Var::U) + Laurent::one(Var::U);
    return exact_divide(num, den);
}

} // namespace

SkeinElement eq1_simple(int r) {
    if (r == 0) throw DomainError("closed form needs r != 0");
    if (r < 0) return mirror(eq1_simple(-r));
    SkeinElement out;
    out.set(0, Laurent::term(r % 2 != 0 ? -1 : 1, -2 * r, Var::U));
    out.set(2, Laurent::term(-1, 1, Var::U) * alternating_quotient(r));
    return out;
}

SkeinElement formula_l1r(int r) {
    if (r == 0) throw DomainError("closed form needs r != 0");
    if (r < 0) return mirror(formula_l1r(-r));
    const Laurent tinv = Laurent::term(1, -2, Var::U);
    Laurent z1 = -tinv + Laurent::term(r % 2 != 0 ? -1 : 1, -2 * r, Var::U) *
                             (tinv + Laurent::one(Var::U));
    SkeinElement out;
    out.set(1, z1);
    out.set(3, alternating_quotient(r));
    return out;
}

} // namespace lassos
