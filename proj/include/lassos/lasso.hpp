#pragma once

#include <string>
#include <vector>

#include "lassos/skein.hpp"

namespace lassos {

/// Lasso diagram in the solid torus: a chain of m+1 nested unknots where
/// consecutive rings share a band with r_i signed clasp twists. Encoded by
/// the twist vector (r_1, ..., r_m); the empty vector is the bare core.
struct Lasso {
    std::vector<int> twists;

    bool operator==(const Lasso& o) const { return twists == o.twists; }
    bool operator!=(const Lasso& o) const { return !(o == *this); }
};

/// "L(1,2)", "L(-3,7)", "L()".
std::string to_string(const Lasso& l);
Lasso parse_lasso(const std::string& text);

/// Diagram writhe, -sum of the twist entries. Defined for raw vectors too.
int writhe(const Lasso& l);

/// Winding degree of the lasso around the core. Requires a zero-free
/// twist vector (DomainError otherwise); normalize first.
int degree(const Lasso& l);

/// degree of the normal form, extended to every lasso: the pinched form
/// L(0) winds zero times.
int winding(const Lasso& l);

/// Reverse the twist vector; an isotopic lasso.
Lasso reverse(const Lasso& l);

/// Eliminate zero entries to a fixpoint: a leading zero drops r_1 and r_2,
/// an interior zero merges its neighbours, a trailing zero drops r_m and
/// r_{m-1}. L(0) itself is terminal: its bracket is z^0, not z^1.
Lasso normalize(const Lasso& l);

/// Kauffman bracket in the solid torus, A-tagged. Handles raw vectors
/// (zero entries anywhere); memoized over suffixes of the computation.
SkeinElement bracket(const Lasso& l);

/// Closed form of bracket(L(r)) for r != 0:
///   A^r z^0 + (-A^-3)^r (sum_{i=1..r} (-1)^i A^(4i-2)) z^2
/// mirrored in A for negative r.
SkeinElement closed_form_simple(int r);

/// Solid-torus Jones invariant: framing_factor(writhe) * bracket, taken to
/// the u variable. u-tagged coefficients.
SkeinElement jones_st(const Lasso& l);

/// Closed form of jones_st(L(r)) for r != 0:
///   (-t)^-r z^0 - t^(1/2) (1 - (-t)^-r)/(t + 1) z^2
/// mirrored in t for negative r. The division is exact.
SkeinElement eq1_simple(int r);

/// Closed form of jones_st(L(1,r)) for r > 0:
///   (-t^-1 + (-t)^-r (t^-1 + 1)) z^1 + (1 - (-t)^-r)/(t + 1) z^3.
/// For r < 0 returns the exact mirror, which is jones_st of the mirrored
/// lasso L(-1,r) — NOT of L(1,r); mixed-sign vectors are out of scope here
/// and belong to the recursion route.
SkeinElement formula_l1r(int r);

} // namespace lassos
