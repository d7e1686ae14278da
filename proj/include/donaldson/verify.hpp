// The verify-paper regression suite: every worked number in the source
// computations, checked exactly, plus the invariant suites. Shared by the CLI
// and the acceptance test binary.
#pragma once

#include "donaldson/catalog.hpp"
#include "donaldson/gluing.hpp"

namespace donaldson {

struct CheckResult {
    std::string id;      // criterion number, e.g. "9c"
    std::string label;
    bool pass = false;
    std::string detail;  // populated on failure
};

std::vector<CheckResult> run_paper_checks();

// Built-in gluing configurations over catalog records, mirrored by the
// bundled match manifests. Keys: BB, CB, BC, CC, K3B and the via-B variants
// BB-viaB, BC-viaB, CB-viaB, CC-viaB.
GluingConfig catalog_glue_config(const std::string& key);
std::vector<std::string> catalog_glue_config_names();

} // namespace donaldson
