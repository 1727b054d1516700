#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lassos/braid.hpp"
#include "lassos/lasso.hpp"
#include "lassos/satellite.hpp"

namespace lassos {

using Matrix = std::vector<std::vector<Laurent>>;

/// (n-1)x(n-1) reduced Burau matrix of a braid word on n >= 2 strands,
/// entries tagged t.
Matrix reduced_burau(const BraidWord& w);

/// Determinant by fraction-free (Bareiss) elimination; exact over the
/// Laurent ring.
Laurent determinant(Matrix m);

/// Conway-normalized Alexander polynomial of the closure of w, which must
/// be a knot.  Computed as det(reduced_burau(w) - I) * (1-t) / (1-t^n),
/// then scaled by the unique unit +-t^j making the result a palindrome
/// with value 1 at t = 1.
Laurent alexander_closure(const BraidWord& w);

/// Alexander polynomial of a satellite: Delta_P(t) * Delta_C(t^n), where a
/// lasso pattern has Delta_P = 1 and n = its degree, and an annular braid
/// pattern has Delta_P = the Alexander polynomial of its planar closure
/// and n = its strand count.
Laurent satellite_alexander(const SatelliteSpec& s);

/// Product of the parts (the connected-sum rule).  Empty list gives 1.
Laurent connected_sum_alexander(const std::vector<Laurent>& parts);

/// One factor Delta_knot(t^power) of a requested Alexander polynomial.
struct AlexanderSpecTerm {
    std::string name; // display label; may be a bare braid rendering
    BraidWord braid;
    int power = 1; // must be >= 0
};

/// One connected summand of the realizing knot.
struct RecipeItem {
    bool is_satellite = false;
    Lasso lasso; // meaningful when is_satellite
    std::string knot_name;
    BraidWord knot;
    int power = 1;
};

struct Recipe {
    std::vector<RecipeItem> items;
    std::string text;  // e.g. "5_1 # 5_1 # Sat(L(1,1),8_19)"
    Laurent target;    // the requested polynomial
    Laurent realized;  // recomputed from the recipe via composition rules
    bool certified = false; // target == realized
};

/// Lasso of the requested degree used by the realization builder:
/// d = 0 -> L(2); d = 1 -> L(1,2); d >= 2 -> L(1,...,1) with d-1 ones.
Lasso canonical_lasso(int degree);

/// Build a knot whose Alexander polynomial is the product of the spec's
/// factors.  Power-1 factors use the knot directly unless proper_satellites
/// is set (then Sat(L(1,2), knot)).  A lasso_override replaces the
/// canonical lasso on every factor whose power equals the override's
/// degree.
Recipe realize_spec(const std::vector<AlexanderSpecTerm>& spec,
                    bool proper_satellites = false,
                    const std::optional<Lasso>& lasso_override = std::nullopt);

/// Parse `5_1^2 * 8_19@3 * 10_161@0`: factors separated by '*', each a
/// knot name with optional multiplicity '^k' and power '@d' (default 1).
/// The resolver maps names to braid words.  Empty input parses to an
/// empty list (the unknot).
std::vector<AlexanderSpecTerm> parse_alexander_spec(
    const std::string& text,
    const std::function<BraidWord(const std::string&)>& resolver);

} // namespace lassos
