// Built-in manifold records used by tests and verify-paper: the K3 surface,
// its two-point blow-up B, the doubles C = B#B and C2 = C#B along the
// genus-2 surface, and the ruled surface Σ×ℂP¹.
#pragma once

#include "donaldson/manifold.hpp"

namespace donaldson {

struct CatalogEntry {
    ManifoldRecord record;
    std::string notes;  // provenance, one line per stored datum
};

const CatalogEntry& catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace donaldson
