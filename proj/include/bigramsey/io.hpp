#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "bigramsey/catalog.hpp"
#include "bigramsey/structures.hpp"

namespace bigramsey {

inline constexpr std::string_view kToolVersion = "0.1.0";

using Structure = std::variant<Graph, Hypergraph3>;

/// Parses "graph n" or "hypergraph3 n" followed by one edge or triple per
/// line. Blank lines and '#' comments are skipped. Throws MalformedInput with
/// the offending line number.
Structure parse_structure(std::string_view text);

/// Throws MalformedInput when the file cannot be read or parsed.
Structure load_structure(const std::filesystem::path& path);

/// 16 hex digits of the 64-bit FNV-1a hash.
std::string input_digest(std::string_view text);

/// JSON catalog; shapes are written only when `with_shapes` and retained.
std::string catalog_to_json(const Catalog& catalog, bool with_shapes = true);

/// Throws MalformedInput on bad JSON, unknown fields values, undecodable
/// codes or a count that disagrees with the shapes array.
Catalog catalog_from_json(std::string_view text);

void save_catalog(const Catalog& catalog, const std::filesystem::path& path, bool with_shapes = true);
Catalog load_catalog(const std::filesystem::path& path);

/// Graphviz source for one shape: tree 0 on the left with ≤ along x and ⪯
/// along y (bottom to top), tree 1 to its right, pair links dotted and leaf
/// edges or hyperedges dashed.
std::string shape_to_dot(Family family, const CanonicalCode& code, const std::string& name);

}  // namespace bigramsey
