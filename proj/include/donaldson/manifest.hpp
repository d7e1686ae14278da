// JSON manifest surface: manifold records, match manifests, and series files.
// Rationals travel as strings ("p" or "p/q") so no float ever enters.
#pragma once

#include <nlohmann/json_fwd.hpp>

#include "donaldson/gluing.hpp"

namespace donaldson {

using Json = nlohmann::json;

// Parses and validates; structural problems throw ErrorKind::parse, failed
// record invariants throw ErrorKind::validation listing every violation.
ManifoldRecord parse_manifest_file(const std::string& path);
ManifoldRecord parse_manifest_json(const Json& j, const std::string& context);

// Parse without the validate_structure gate; used by the `validate` command
// to report violations instead of failing.
ManifoldRecord parse_manifest_json_unchecked(const Json& j, const std::string& context);
ManifoldRecord parse_manifest_file_unchecked(const std::string& path);

Json serialize_manifest(const ManifoldRecord& X);

// Match manifests: {"name": ..., "classes": [{name, d1, d2, boundary}...],
// "w": sparse map over matched names and "Sigma", "mode": "direct"|"via-b"}.
GluingConfig parse_match_file(const std::string& path, const ManifoldRecord& x1,
                              const ManifoldRecord& x2);
GluingConfig parse_match_json(const Json& j, const ManifoldRecord& x1, const ManifoldRecord& x2,
                              const std::string& context);

// Series files for piping between CLI invocations.
Json serialize_series(const DSeries& s);
DSeries parse_series_json(const Json& j, const std::string& context);
DSeries parse_series_file(const std::string& path);

// Integer/rational combinations of generator names: "S-E1-E2", "1/2D+1/2DC",
// "2*E1 - F".
LatticeClass parse_class_expr(const std::string& expr, const LatticePtr& lattice);

// Sparse coordinate map {"gen": "p/q" | int, ...} -> class.
LatticeClass parse_sparse_class(const Json& j, const LatticePtr& lattice, const std::string& context);

std::string read_text_file(const std::string& path);
Json load_json_file(const std::string& path);

} // namespace donaldson
