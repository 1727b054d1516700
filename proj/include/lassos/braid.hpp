#pragma once

#include <string>
#include <vector>

#include "lassos/skein.hpp"

namespace lassos {

/// Braid word on a fixed number of strands. Letters are signed generator
/// indices: +i is sigma_i, -i its inverse, 1 <= i < strands.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord& o) const {
        return strands == o.strands && letters == o.letters;
    }
    bool operator!=(const BraidWord& o) const { return !(*this == o); }
};

/// Validate strand count and letter range; DomainError on violation.
void validate(const BraidWord& w);

/// "B3: 1 -2 1 -2"; empty words print as "B3:".
std::string to_string(const BraidWord& w);
BraidWord parse_braid(const std::string& text);

/// Sum of letter signs (the diagram writhe of the closure).
int exponent_sum(const BraidWord& w);

/// Permutation of strand positions induced by the word: entry j is the
/// bottom position whose strand exits at top position j.
std::vector<int> closure_permutation(const BraidWord& w);

int closure_components(const BraidWord& w);
bool is_knot(const BraidWord& w);

/// Concatenate words on the same strand count.
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Closure is the connected sum of the two knot closures: b is shifted so
/// its first strand is a's last.
BraidWord connected_sum(const BraidWord& a, const BraidWord& b);

/// Replace every strand by k parallel strands. Each letter becomes the
/// k^2-crossing diamond block passing one group over the next (for k=2:
/// sigma_2 sigma_1 sigma_3 sigma_2), every crossing between distinct
/// groups and carrying the original sign.
BraidWord cable(const BraidWord& w, int k);

/// n-th power of the half twist on k strands, ascending-run form
/// (sigma_1..sigma_{k-1})(sigma_1..sigma_{k-2})...(sigma_1); k(k-1)/2
/// letters per power, inverted and reversed for n < 0.
BraidWord half_twists(int k, int n);

/// cable(w, k) followed by half_twists(k, -2 * exponent_sum(w)) on the
/// first cable group: the k-cable with zero framing.
BraidWord zero_framed_cable(const BraidWord& w, int k);

/// Kauffman bracket of the Markov closure, unknot-normalized, via a
/// transfer evaluation over planar matchings (dimension Catalan(strands)).
Laurent bracket_sphere(const BraidWord& w);

/// Bracket of the closure taken around the annulus core, in the normalized
/// solid-torus basis. Each smoothed state's loops are classified by their
/// net traversal of the closure arcs, which the evaluator checks is always
/// in {-1, 0, +1}.
SkeinElement bracket_annulus(const BraidWord& w);

/// Independent oracles: enumerate all 2^c smoothings of the diagram and
/// trace the resulting loops explicitly. Guard: at most 20 letters.
Laurent state_sum_sphere(const BraidWord& w);
SkeinElement state_sum_annulus(const BraidWord& w);

/// framing_factor(exponent_sum) * bracket_sphere, in the u variable.
Laurent jones_closure(const BraidWord& w);

/// Jones polynomial of the zero-framed k-cable of a knot closure;
/// k = 0 gives 1 by convention, k = 1 the plain Jones polynomial.
Laurent parallel_jones(const BraidWord& w, int k);

} // namespace lassos
