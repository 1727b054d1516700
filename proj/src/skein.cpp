#include "lassos/skein.hpp"

namespace lassos {

Laurent delta(Var v) {
    switch (v) {
        case Var::A:
            return Laurent::term(-1, 2, Var::A) + Laurent::term(-1, -2, Var::A);
        case Var::U:
            return Laurent::term(-1, 1, Var::U) + Laurent::term(-1, -1, Var::U);
        case Var::T:
            break;
    }
    throw DomainError("loop value needs half powers of t");
}

SkeinElement SkeinElement::basis(int k, Var v) {
    SkeinElement x;
    x.set(k, Laurent::one(v));
    return x;
}

Var SkeinElement::var() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_zero()) return c.var();
    return Var::A;
}

Laurent SkeinElement::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Laurent::zero(var()) : it->second;
}

void SkeinElement::set(int k, Laurent c) {
    if (k < 0) throw DomainError("negative basis index z^" + std::to_string(k));
    if (c.is_zero()) {
        terms_.erase(k);
        return;
    }
    if (!is_zero() && c.var() != var())
        throw VariableMismatch("skein coefficients must share one variable");
    terms_[k] = std::move(c);
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            set(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            set(k, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SkeinElement& SkeinElement::operator*=(const Laurent& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<int, Laurent> out;
    for (const auto& [k, c] : terms_) {
        Laurent p = c * s;
        if (!p.is_zero()) out.emplace(k, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) {
    if (a.is_zero() || b.is_zero()) return SkeinElement::zero();
    const Laurent d = delta(a.var());
    SkeinElement out;
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms()) {
            Laurent c = ci * cj;
            if (i == 0 || j == 0) c *= d;
            SkeinElement t;
            t.set(i + j, std::move(c));
            out += t;
        }
    return out;
}

int geometric_degree(const SkeinElement& x) {
    if (x.is_zero()) throw ZeroArgument("geometric degree of zero element");
    return x.terms().rbegin()->first;
}

SkeinElement mirror(const SkeinElement& x) {
    SkeinElement out;
    for (const auto& [k, c] : x.terms()) out.set(k, mirror(c));
    return out;
}

SkeinElement to_jones_variable(const SkeinElement& x) {
    SkeinElement out;
    for (const auto& [k, c] : x.terms()) out.set(k, to_jones_variable(c));
    return out;
}

Laurent substitute_basis(const SkeinElement& x, const std::function<Laurent(int)>& image) {
    if (x.is_zero()) return Laurent::zero(Var::U);
    bool have_tag = false;
    Var target = x.var();
    std::map<int, Laurent> images;
    for (const auto& [k, c] : x.terms()) {
        Laurent img = image(k);
        if (!img.is_zero()) {
            if (!have_tag) {
                target = img.var();
                have_tag = true;
            } else if (img.var() != target) {
                throw VariableMismatch("basis images must share one variable");
            }
        }
        images.emplace(k, std::move(img));
    }
    Laurent out(target);
    for (const auto& [k, c] : x.terms()) {
        Laurent coeff = c;
        if (coeff.var() != target) {
            if (coeff.var() == Var::A && target == Var::U)
                coeff = to_jones_variable(coeff);
            else
                throw VariableMismatch("cannot convert skein coefficients to image variable");
        }
        out += coeff * images.at(k);
    }
    return out;
}

Laurent embed_to_s3(const SkeinElement& x) {
    if (x.is_zero()) throw ZeroArgument("embedding of zero element");
    const Var v = x.var();
    const Laurent d = delta(v);
    Laurent out(v);
    for (const auto& [k, c] : x.terms())
        out += (k == 0) ? c : c * pow(d, k - 1);
    return out;
}

std::string to_string(const SkeinElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : x.terms()) {
        std::string cs = to_string(c);
        const bool multi = c.terms().size() > 1;
        std::string body;
        bool neg = false;
        if (multi) {
            body = "(" + cs + ")·z^" + std::to_string(k);
        } else if (c.is_one()) {
            body = "z^" + std::to_string(k);
        } else if (cs == "-1") {
            neg = true;
            body = "z^" + std::to_string(k);
        } else if (!cs.empty() && cs[0] == '-') {
            neg = true;
            body = cs.substr(1) + "·z^" + std::to_string(k);
        } else {
            body = cs + "·z^" + std::to_string(k);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

} // namespace lassos
