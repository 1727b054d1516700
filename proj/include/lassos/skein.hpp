#pragma once

#include <functional>
#include <map>
#include <string>

#include "lassos/laurent.hpp"

namespace lassos {

/// Value of one closed loop, -x^2 - x^-2 in A and -u - u^-1 after the
/// bracket-to-Jones substitution. Undefined for plain t.
Laurent delta(Var v);

/// Element of the solid-torus skein module in the normalized basis
/// z^0, z^1, z^2, ...: a finite map k -> Laurent coefficient, no zero
/// entries, all coefficients sharing one variable tag. z^0 is the
/// delta-scaled empty diagram, z^k (k >= 1) is k parallel core circles.
class SkeinElement {
public:
    SkeinElement() = default;

    static SkeinElement zero() { return {}; }
    static SkeinElement basis(int k, Var v = Var::A);

    bool is_zero() const { return terms_.empty(); }
    /// Tag shared by the coefficients (A for the zero element).
    Var var() const;
    const std::map<int, Laurent>& terms() const { return terms_; }
    Laurent coeff(int k) const;
    void set(int k, Laurent c);

    SkeinElement& operator+=(const SkeinElement& o);
    SkeinElement& operator-=(const SkeinElement& o);
    friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
    friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }

    /// Scale every coefficient.
    SkeinElement& operator*=(const Laurent& s);
    friend SkeinElement operator*(const Laurent& s, SkeinElement x) { return x *= s; }

    /// Skein product: z^0 acts as delta times the identity, and
    /// z^i * z^j = z^(i+j) for i, j >= 1.
    friend SkeinElement operator*(const SkeinElement& a, const SkeinElement& b);

    bool operator==(const SkeinElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const SkeinElement& o) const { return !(*this == o); }

private:
    std::map<int, Laurent> terms_;
};

/// Highest basis index with nonzero coefficient; ZeroArgument on zero.
int geometric_degree(const SkeinElement& x);

/// Negate all coefficient exponents (A <-> A^-1 resp. t <-> t^-1).
SkeinElement mirror(const SkeinElement& x);

/// Convert every coefficient from A to u.
SkeinElement to_jones_variable(const SkeinElement& x);

/// Replace each basis element z^k by image(k) and sum. All images must
/// share one variable tag; coefficients tagged A are converted to u when
/// the images are u-tagged (the only permitted conversion).
Laurent substitute_basis(const SkeinElement& x, const std::function<Laurent(int)>& image);

/// Read the element in the 3-sphere: z^0 -> 1, z^k -> delta^(k-1).
/// Requires x nonzero.
Laurent embed_to_s3(const SkeinElement& x);

/// Text form like "(A^7 - A^3 + A^-1)·z^0 + A^-3·z^2".
std::string to_string(const SkeinElement& x);

} // namespace lassos
