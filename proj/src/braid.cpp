#include "lassos/braid.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace lassos {

void validate(const BraidWord& w) {
    if (w.strands < 1) throw DomainError("braid needs at least one strand");
    for (int l : w.letters) {
        int i = std::abs(l);
        if (i < 1 || i >= w.strands)
            throw DomainError("letter " + std::to_string(l) + " out of range for B" +
                              std::to_string(w.strands));
    }
}

std::string to_string(const BraidWord& w) {
    std::string out = "B" + std::to_string(w.strands) + ":";
    for (int l : w.letters) out += " " + std::to_string(l);
    return out;
}

BraidWord parse_braid(const std::string& text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != 'B') throw ParseError("braid literal must start with 'B'");
    ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected strand count after 'B'");
    BraidWord w;
    w.strands = std::stoi(text.substr(start, i - start));
    skip();
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':' in braid literal");
    ++i;
    while (true) {
        skip();
        if (i >= text.size()) break;
        bool neg = false;
        if (text[i] == '-' || text[i] == '+') neg = text[i++] == '-';
        start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected generator index in braid literal");
        int v = std::stoi(text.substr(start, i - start));
        if (v == 0) throw ParseError("generator index 0 is not a letter");
        w.letters.push_back(neg ? -v : v);
    }
    validate(w);
    return w;
}

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (int l : w.letters) s += l > 0 ? 1 : -1;
    return s;
}

std::vector<int> closure_permutation(const BraidWord& w) {
    validate(w);
    std::vector<int> at(w.strands);
    std::iota(at.begin(), at.end(), 0);
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        std::swap(at[i], at[i + 1]);
    }
    return at;
}

int closure_components(const BraidWord& w) {
    std::vector<int> p = closure_permutation(w);
    std::vector<char> seen(p.size(), 0);
    int cycles = 0;
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (size_t j = s; !seen[j]; j = p[j]) seen[j] = 1;
    }
    return cycles;
}

bool is_knot(const BraidWord& w) {
    return closure_components(w) == 1;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw DomainError("concat needs equal strand counts");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord connected_sum(const BraidWord& a, const BraidWord& b) {
    if (!is_knot(a) || !is_knot(b))
        throw DomainError("connected sum needs knot closures on both sides");
    BraidWord out;
    out.strands = a.strands + b.strands - 1;
    out.letters = a.letters;
    const int shift = a.strands - 1;
    for (int l : b.letters) out.letters.push_back(l > 0 ? l + shift : l - shift);
    return out;
}

BraidWord cable(const BraidWord& w, int k) {
    validate(w);
    if (k < 1) throw DomainError("cable width must be positive");
    BraidWord out;
    out.strands = w.strands * k;
    for (int l : w.letters) {
        const int sign = l > 0 ? 1 : -1;
        const int mid = (std::abs(l) - 1) * k + k; // generator crossing the group boundary
        for (int level = 1; level <= 2 * k - 1; ++level) {
            const int width = level <= k ? level : 2 * k - level;
            int g = mid - width + 1;
            for (int j = 0; j < width; ++j, g += 2) out.letters.push_back(sign * g);
        }
    }
    return out;
}

BraidWord half_twists(int k, int n) {
    if (k < 1) throw DomainError("half twist needs at least one strand");
    BraidWord base;
    base.strands = k;
    for (int run = k - 1; run >= 1; --run)
        for (int g = 1; g <= run; ++g) base.letters.push_back(g);
    BraidWord out;
    out.strands = k;
    if (n >= 0) {
        for (int c = 0; c < n; ++c)
            out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
    } else {
        std::vector<int> inv(base.letters.rbegin(), base.letters.rend());
        for (int& l : inv) l = -l;
        for (int c = 0; c < -n; ++c)
            out.letters.insert(out.letters.end(), inv.begin(), inv.end());
    }
    return out;
}

BraidWord zero_framed_cable(const BraidWord& w, int k) {
    BraidWord out = cable(w, k);
    BraidWord tw = half_twists(k, -2 * exponent_sum(w));
    tw.strands = out.strands; // same letters, acting on the first cable group
    return concat(out, tw);
}

// ---------------------------------------------------------------------------
// Transfer evaluation over planar matchings.
//
// A state is a perfect matching of the 2n boundary points of the partially
// smoothed tangle: points 0..n-1 are the closure inputs at the bottom,
// points n..2n-1 the current top. Expanding one crossing keeps the matching
// (identity smoothing) or caps the two top points involved (bridge
// smoothing); closed loops created by the bridge are absorbed as factors of
// delta. The state space has Catalan(n) reachable matchings.
// ---------------------------------------------------------------------------

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<size_t>(x + 11);
        return h;
    }
};

using StateMap = std::unordered_map<std::vector<int>, Laurent, VecHash>;

void accumulate(StateMap& m, const std::vector<int>& key, Laurent val) {
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, std::move(val));
    } else {
        it->second += val;
        if (it->second.is_zero()) m.erase(it);
    }
}

StateMap transfer(const BraidWord& w) {
    validate(w);
    const int n = w.strands;
    std::vector<int> id(2 * n);
    for (int j = 0; j < n; ++j) {
        id[j] = n + j;
        id[n + j] = j;
    }
    StateMap cur;
    cur.emplace(std::move(id), Laurent::one(Var::A));
    const Laurent d = delta(Var::A);

    for (int l : w.letters) {
        const int a = n + std::abs(l) - 1;
        const int b = a + 1;
        const Laurent c_id = Laurent::term(1, l > 0 ? 1 : -1, Var::A);
        const Laurent c_e = Laurent::term(1, l > 0 ? -1 : 1, Var::A);
        StateMap next;
        next.reserve(cur.size() * 2);
        for (const auto& [m, amp] : cur) {
            accumulate(next, m, amp * c_id);
            if (m[a] == b) {
                accumulate(next, m, amp * c_e * d);
            } else {
                std::vector<int> m2 = m;
                const int x = m2[a], y = m2[b];
                m2[x] = y;
                m2[y] = x;
                m2[a] = b;
                m2[b] = a;
                accumulate(next, m2, amp * c_e);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

struct LoopCounts {
    int contractible = 0;
    int winding = 0;
};

// Close the matching with the n parallel arcs around the annulus and count
// the loops. Net closure-arc traversal per loop is the winding number of an
// embedded circle in the annulus, so it must land in {-1, 0, +1}.
LoopCounts classify_closure(const std::vector<int>& m, int n) {
    LoopCounts out;
    std::vector<char> seen(2 * n, 0);
    for (int s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        int net = 0;
        int p = s;
        while (!seen[p]) {
            seen[p] = 1;
            const int q = m[p];
            seen[q] = 1;
            if (q >= n) {
                ++net;
                p = q - n;
            } else {
                --net;
                p = q + n;
            }
        }
        if (net == 0)
            ++out.contractible;
        else if (net == 1 || net == -1)
            ++out.winding;
        else
            throw DomainError("loop with winding " + std::to_string(net) +
                              " in annular closure");
    }
    return out;
}

} // namespace

Laurent bracket_sphere(const BraidWord& w) {
    const Laurent d = delta(Var::A);
    Laurent out(Var::A);
    for (const auto& [m, amp] : transfer(w)) {
        const LoopCounts lc = classify_closure(m, w.strands);
        out += amp * pow(d, lc.contractible + lc.winding - 1);
    }
    return out;
}

SkeinElement bracket_annulus(const BraidWord& w) {
    const Laurent d = delta(Var::A);
    SkeinElement out;
    for (const auto& [m, amp] : transfer(w)) {
        const LoopCounts lc = classify_closure(m, w.strands);
        SkeinElement part;
        if (lc.winding == 0)
            part.set(0, amp * pow(d, lc.contractible - 1));
        else
            part.set(lc.winding, amp * pow(d, lc.contractible));
        out += part;
    }
    return out;
}

// ---------------------------------------------------------------------------
// State-sum oracle: enumerate every smoothing of the diagram and trace the
// loops through an explicit node graph. Independent of the transfer route.
// ---------------------------------------------------------------------------

namespace {

struct Half {
    int to = -1;
    int dw = 0; // closure-arc traversal when walking this direction
    int back = 0;
};

struct Tracer {
    int n, c;
    std::vector<std::array<Half, 2>> adj;
    std::vector<int> fill;

    Tracer(int strands, int letters)
        : n(strands), c(letters), adj((letters + 1) * strands), fill(adj.size(), 0) {}

    int node(int level, int col) const { return level * n + col; }

    void edge(int u, int v, int dw) {
        const int su = fill[u]++;
        const int sv = fill[v]++; // for a self-loop this is su + 1
        adj[u][su] = {v, dw, sv};
        adj[v][sv] = {u, -dw, su};
    }

    LoopCounts trace() {
        LoopCounts out;
        std::vector<std::array<char, 2>> used(adj.size(), {0, 0});
        for (size_t u = 0; u < adj.size(); ++u)
            for (int s0 = 0; s0 < 2; ++s0) {
                if (used[u][s0]) continue;
                int net = 0;
                int cur = static_cast<int>(u), s = s0;
                while (!used[cur][s]) {
                    used[cur][s] = 1;
                    const Half& h = adj[cur][s];
                    net += h.dw;
                    used[h.to][h.back] = 1;
                    cur = h.to;
                    s = 1 - h.back;
                }
                if (net == 0)
                    ++out.contractible;
                else if (net == 1 || net == -1)
                    ++out.winding;
                else
                    throw DomainError("loop with winding " + std::to_string(net) +
                                      " in state sum");
            }
        return out;
    }
};

// Loop census of one fully smoothed diagram; bit l of mask picks the bridge
// smoothing for letter l.
LoopCounts smoothed_loops(const BraidWord& w, uint32_t mask) {
    const int n = w.strands;
    const int c = static_cast<int>(w.letters.size());
    Tracer t(n, c);
    for (int l = 1; l <= c; ++l) {
        const int i = std::abs(w.letters[l - 1]) - 1;
        for (int j = 0; j < n; ++j) {
            if (j == i || j == i + 1) continue;
            t.edge(t.node(l - 1, j), t.node(l, j), 0);
        }
        if (mask & (1u << (l - 1))) {
            t.edge(t.node(l - 1, i), t.node(l - 1, i + 1), 0);
            t.edge(t.node(l, i), t.node(l, i + 1), 0);
        } else {
            t.edge(t.node(l - 1, i), t.node(l, i), 0);
            t.edge(t.node(l - 1, i + 1), t.node(l, i + 1), 0);
        }
    }
    for (int j = 0; j < n; ++j) t.edge(t.node(c, j), t.node(0, j), 1);
    return t.trace();
}

template <typename Fn>
void for_each_state(const BraidWord& w, Fn&& fn) {
    validate(w);
    const int c = static_cast<int>(w.letters.size());
    if (c > 20) throw DomainError("state sum limited to 20 letters");
    for (uint32_t mask = 0; mask < (1u << c); ++mask) {
        int expo = 0;
        for (int l = 0; l < c; ++l) {
            const int sgn = w.letters[l] > 0 ? 1 : -1;
            expo += (mask & (1u << l)) ? -sgn : sgn;
        }
        fn(expo, smoothed_loops(w, mask));
    }
}

} // namespace

Laurent state_sum_sphere(const BraidWord& w) {
    const Laurent d = delta(Var::A);
    Laurent out(Var::A);
    for_each_state(w, [&](int expo, const LoopCounts& lc) {
        out += Laurent::term(1, expo, Var::A) *
               pow(d, lc.contractible + lc.winding - 1);
    });
    return out;
}

SkeinElement state_sum_annulus(const BraidWord& w) {
    const Laurent d = delta(Var::A);
    SkeinElement out;
    for_each_state(w, [&](int expo, const LoopCounts& lc) {
        SkeinElement part;
        const Laurent amp = Laurent::term(1, expo, Var::A);
        if (lc.winding == 0)
            part.set(0, amp * pow(d, lc.contractible - 1));
        else
            part.set(lc.winding, amp * pow(d, lc.contractible));
        out += part;
    });
    return out;
}

Laurent jones_closure(const BraidWord& w) {
    return to_jones_variable(framing_factor(exponent_sum(w)) * bracket_sphere(w));
}

Laurent parallel_jones(const BraidWord& w, int k) {
    if (k < 0) throw DomainError("parallel Jones needs k >= 0");
    if (!is_knot(w)) throw DomainError("parallel Jones needs a knot closure");
    if (k == 0) return Laurent::one(Var::U);
    return jones_closure(zero_framed_cable(w, k));
}

} // namespace lassos
