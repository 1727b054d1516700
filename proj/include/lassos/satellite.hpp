#pragma once

#include <string>
#include <variant>

#include "lassos/braid.hpp"
#include "lassos/lasso.hpp"

namespace lassos {

/// Pattern knot in the solid torus: a lasso or an annular braid closure.
using Pattern = std::variant<Lasso, BraidWord>;

/// Satellite of a companion knot (given as a braid-word closure) with the
/// zero-framed pattern embedding.
struct SatelliteSpec {
    Pattern pattern;
    BraidWord companion;
};

std::string to_string(const Pattern& p);

/// Diagram writhe of the pattern (lasso writhe resp. exponent sum).
int pattern_writhe(const Pattern& p);

/// Annular bracket of the pattern, A-tagged.
SkeinElement pattern_bracket(const Pattern& p);

/// Solid-torus Jones invariant of the pattern, u-tagged.
SkeinElement pattern_jones_st(const Pattern& p);

/// Writhe of the cabled diagram: k^2 * w crossings from cabling plus
/// n * k(k-1)/2 from the inserted half twists.
long cable_writhe(int k, int n, int w);

/// Highest solid-torus basis index in the pattern bracket.
int pattern_degree(const Pattern& p);

/// wr(pattern) + M * wr(companion) with M the pattern's geometric degree.
long satellite_writhe(const SatelliteSpec& s);

/// Bracket of the satellite: substitute into the pattern bracket
///   z^k -> framing_factor(-wr(C))^(M-k) * bracket of the zero-framed
///          k-cable of C
/// with the k = 0 cable read as 1.
Laurent satellite_bracket(const SatelliteSpec& s);

/// Jones polynomial of the satellite by substituting the companion's
/// parallel Jones values into the pattern's solid-torus invariant:
///   z^k -> parallel_jones(C, k).
Laurent satellite_jones(const SatelliteSpec& s);

/// Same invariant through the bracket route:
///   framing_factor(satellite_writhe) * satellite_bracket, taken to u.
/// Kept permanently as a cross-check of satellite_jones.
Laurent satellite_jones_via_bracket(const SatelliteSpec& s);

/// Result of checking a companion against one of the distinguishing
/// hypotheses: the Alexander polynomial must be nontrivial and the listed
/// parallel Jones value must differ from its unknot reference.
struct CompanionCheck {
    bool holds = false;
    bool alexander_nontrivial = false;
    bool jones_differs = false;
    Laurent alexander;
    Laurent observed;  // J(C;2) resp. J(C;3)
    Laurent reference; // the value an unknot companion would give
};

/// Delta_C != 1 and J(C;2) != -t^(1/2) - t^(-1/2).
CompanionCheck thm1_condition(const BraidWord& companion);

/// Delta_C != 1 and J(C;3) != J(C) * delta_u^2.
CompanionCheck thm2_condition(const BraidWord& companion);

struct DistinguishReport {
    Lasso pattern1, pattern2;
    BraidWord companion;
    Laurent alexander1, alexander2; // of the two satellites
    Laurent jones1, jones2;
    std::string verdict; // distinguished-by-Alexander / distinguished-by-Jones /
                         // not-distinguished
};

/// Compare the two satellites Sat(p1, C) and Sat(p2, C).
DistinguishReport distinguish(const Lasso& p1, const Lasso& p2, const BraidWord& companion);

} // namespace lassos
