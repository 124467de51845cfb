#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gcomonad/structure.hpp"

namespace gcomonad {

using json = nlohmann::json;

/// A structure file: one structure, optionally pointed.
struct LoadedStructure {
  Structure structure;
  std::optional<Element> point;

  /// Throws StructureError when the file carries no "point".
  PointedStructure pointed() const;
};

/// Parses the shared structure format:
///   {"signature": {name: arity}, "universe": [ids],
///    "relations": {name: [[ids]]}, "point": id}
/// Unknown fields, duplicate keys, and invariant violations are rejected with
/// a StructureError naming the first problem found.
LoadedStructure parse_structure(std::string_view text);
LoadedStructure load_structure(const std::filesystem::path& path);

json structure_to_json(const Structure& s, std::optional<Element> point = std::nullopt);

/// Reads a whole file, throwing StructureError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
/// Parses JSON text with duplicate object keys rejected.
json parse_json_strict(std::string_view text);

}  // namespace gcomonad
