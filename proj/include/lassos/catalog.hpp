#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lassos/braid.hpp"

namespace lassos {

/// Named knot with frozen self-test polynomials.  `alexander` is t-tagged,
/// `jones` u-tagged; both must match recomputation from the braid word.
struct CatalogEntry {
    std::string name;
    BraidWord braid;
    Laurent alexander;
    Laurent jones;
    std::string notes;
};

class Catalog {
public:
    static Catalog builtin();
    /// Versioned JSON file: {"version":1,"knots":[{name,braid,alexander,jones,notes}]}
    /// with polynomials in canonical text form.
    static Catalog load(const std::string& path);
    /// load($LASSOS_CATALOG) when the variable is set, builtin() otherwise.
    static Catalog from_env_or_builtin();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* find(const std::string& name) const;
    /// find, but throws DomainError listing the known names.
    const CatalogEntry& at(const std::string& name) const;

    /// Accepts a catalog name or an inline braid word ("B3: 1 -2 1 -2").
    BraidWord resolve(const std::string& text) const;
    std::function<BraidWord(const std::string&)> resolver() const;

private:
    std::vector<CatalogEntry> entries_;
};

/// Recompute the entry's polynomials from its braid word; returns an empty
/// string on success and a description of the first mismatch otherwise.
std::string verify_entry(const CatalogEntry& e);

} // namespace lassos
