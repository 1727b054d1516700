#include "lassos/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace lassos {

const char* var_name(Var v) {
    switch (v) {
        case Var::A: return "A";
        case Var::U: return "u";
        case Var::T: return "t";
    }
    return "?";
}

Laurent Laurent::constant(Int c, Var v) {
    Laurent p(v);
    p.set(0, std::move(c));
    return p;
}

Laurent Laurent::term(Int c, int e, Var v) {
    Laurent p(v);
    p.set(e, std::move(c));
    return p;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int Laurent::min_exp() const {
    if (is_zero()) throw ZeroArgument("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    if (is_zero()) throw ZeroArgument("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int Laurent::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void Laurent::set(int e, Int c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void Laurent::check_var(const Laurent& o) const {
    if (!is_zero() && !o.is_zero() && var_ != o.var_)
        throw VariableMismatch(std::string("cannot combine ") + var_name(var_) +
                               " with " + var_name(o.var_));
}

Laurent& Laurent::operator+=(const Laurent& o) {
    check_var(o);
    if (is_zero()) var_ = o.var_;
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    check_var(o);
    if (is_zero()) var_ = o.var_;
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    check_var(o);
    if (is_zero()) return *this;
    if (o.is_zero()) {
        terms_.clear();
        var_ = o.var_;
        return *this;
    }
    std::map<int, Int> out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Int& slot = out[e1 + e2];
            slot += c1 * c2;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    terms_ = std::move(out);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent p(var_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

bool Laurent::operator==(const Laurent& o) const {
    if (is_zero() && o.is_zero()) return true;
    return var_ == o.var_ && terms_ == o.terms_;
}

Laurent exact_divide(const Laurent& p, const Laurent& q) {
    if (q.is_zero()) throw ZeroArgument("exact_divide by zero");
    if (p.is_zero()) return Laurent::zero(q.var());
    p.check_var(q);

    const int emin = p.min_exp() - q.min_exp();
    const Int lead_q = q.terms_.rbegin()->second;
    const int exp_q = q.max_exp();

    Laurent r = p;
    Laurent out(p.var());
    while (!r.is_zero()) {
        const int e = r.max_exp() - exp_q;
        if (e < emin)
            throw NonExactDivision("remainder " + to_string(r));
        const Int lead_r = r.terms_.rbegin()->second;
        if (lead_r % lead_q != 0)
            throw NonExactDivision("coefficient " + lead_r.str() +
                                   " not divisible by " + lead_q.str());
        Laurent t = Laurent::term(lead_r / lead_q, e, p.var());
        out += t;
        r -= t * q;
    }
    return out;
}

Laurent substitute_power(const Laurent& p, int d) {
    Laurent out(p.var());
    for (const auto& [e, c] : p.terms_) {
        auto it = out.terms_.find(e * d);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e * d, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Laurent mirror(const Laurent& p) {
    Laurent out(p.var());
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(-e, c);
    return out;
}

Laurent to_jones_variable(const Laurent& p) {
    if (!p.is_zero() && p.var() != Var::A)
        throw VariableMismatch("to_jones_variable expects an A-tagged polynomial");
    Laurent out(Var::U);
    for (const auto& [e, c] : p.terms_) {
        if (e % 2 != 0)
            throw OddExponent("A-exponent " + std::to_string(e) +
                              " has no image in half powers of t");
        out.terms_.emplace(-e / 2, c);
    }
    return out;
}

Laurent framing_factor(int n) {
    return Laurent::term(n % 2 == 0 ? 1 : -1, -3 * n, Var::A);
}

Laurent pow(const Laurent& p, int n) {
    if (n < 0) throw DomainError("pow with negative exponent");
    Laurent out = Laurent::one(p.var());
    for (int i = 0; i < n; ++i) out *= p;
    return out;
}

namespace {

// One printed term, sign handled by the caller.
std::string term_body(const Int& mag, int e, Var v) {
    std::string vp;
    if (v == Var::U) {
        if (e != 0) {
            if (e % 2 == 0) {
                int k = e / 2;
                vp = (k == 1) ? "t" : "t^" + std::to_string(k);
            } else {
                vp = "t^" + std::to_string(e) + "/2";
            }
        }
    } else {
        const char* name = (v == Var::A) ? "A" : "t";
        if (e == 1)
            vp = name;
        else if (e != 0)
            vp = std::string(name) + "^" + std::to_string(e);
    }
    if (vp.empty()) return mag.str();
    if (mag == 1) return vp;
    return mag.str() + vp;
}

} // namespace

std::string to_string(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // A- and t-polynomials read highest power first; Jones-variable
    // polynomials read lowest first.
    const auto emit = [&](int e, const Int& coeff) {
        const bool neg = coeff < 0;
        const Int mag = neg ? Int(-coeff) : coeff;
        if (out.empty())
            out = (neg ? "-" : "") + term_body(mag, e, p.var());
        else
            out += (neg ? " - " : " + ") + term_body(mag, e, p.var());
    };
    if (p.var() == Var::U) {
        for (const auto& [e, c] : p.terms()) emit(e, c);
    } else {
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
            emit(it->first, it->second);
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    // Optional "·" (UTF-8) or "*" between coefficient and variable.
    void eat_sep() {
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
        } else if (i + 1 < s.size() && static_cast<unsigned char>(s[i]) == 0xC2 &&
                   static_cast<unsigned char>(s[i + 1]) == 0xB7) {
            i += 2;
        }
    }
    bool digits(std::string& out) {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) return false;
        out = s.substr(start, i - start);
        return true;
    }
};

int parse_signed_int(Cursor& c) {
    bool neg = false;
    if (c.eat('-'))
        neg = true;
    else
        c.eat('+');
    std::string d;
    if (!c.digits(d)) throw ParseError("expected integer at offset " + std::to_string(c.i));
    long v = std::strtol(d.c_str(), nullptr, 10);
    return static_cast<int>(neg ? -v : v);
}

} // namespace

Laurent parse_laurent(const std::string& text, Var v) {
    Cursor c{text};
    Laurent out(v);
    const char letter = (v == Var::A) ? 'A' : 't';

    bool first = true;
    while (!c.eof()) {
        bool neg = false;
        if (c.eat('-'))
            neg = true;
        else if (!c.eat('+') && !first)
            throw ParseError("expected '+' or '-' at offset " + std::to_string(c.i));
        first = false;

        std::string digits;
        bool has_coeff = c.digits(digits);
        Int mag = has_coeff ? Int(digits) : Int(1);
        if (has_coeff) c.eat_sep();

        bool has_var = c.eat(letter);
        if (!has_coeff && !has_var)
            throw ParseError("expected term at offset " + std::to_string(c.i));

        int uexp = 0;
        if (has_var) {
            int e = 1;
            bool half = false;
            if (c.eat('^')) {
                e = parse_signed_int(c);
                if (c.eat('/')) {
                    std::string den;
                    if (!c.digits(den) || den != "2")
                        throw ParseError("only /2 exponents are supported");
                    half = true;
                }
            }
            if (half && v != Var::U)
                throw ParseError("half exponents only make sense for the u variable");
            if (v == Var::U)
                uexp = half ? e : 2 * e;
            else
                uexp = e;
        }
        out += Laurent::term(neg ? -mag : mag, uexp, v);
    }
    return out;
}

} // namespace lassos
