#pragma once

#include "json.hpp"

#include "lassos/braid.hpp"
#include "lassos/skein.hpp"

namespace lassos {

/// {"var": "A", "terms": [[exp, "coeff"], ...]} with exponents descending;
/// coefficients are decimal strings so arbitrary precision survives.
nlohmann::json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j);

/// {"var": "A", "basis": {"0": [[exp, "coeff"], ...], "2": ...}}
nlohmann::json skein_to_json(const SkeinElement& x);
SkeinElement skein_from_json(const nlohmann::json& j);

/// {"strands": n, "letters": [..]}
nlohmann::json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const nlohmann::json& j);

} // namespace lassos
