#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jonq/jonq_group.hpp"
#include "jonq/unipotent_slice.hpp"

namespace jonq {

// On-disk form of a map, as JSON:
//   {"n": 2, "variant": "J", "entries": [{"mu": "1", "f": "x2"}, {"mu": "1", "f": "0"}]}
// variant is "J", "Jhat" or "flow"; flow entries carry only "f", which may use u.
struct MapEntry {
  std::optional<std::string> mu;
  std::string f;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct MapDocument {
  std::size_t n = 0;
  std::string variant;
  std::vector<MapEntry> entries;
  friend bool operator==(const MapDocument&, const MapDocument&) = default;
};

/// Throws ValidationError on malformed JSON or a shape mismatch.
MapDocument parse_map_document(std::string_view json_text);
/// Accepts a single document, an array of them, or {"flows": [...]}.
std::vector<MapDocument> parse_map_documents(std::string_view json_text);
std::string serialize(const MapDocument& doc);

using LoadedMap = std::variant<JonqElement, AdditiveFlow>;

/// Parses every expression and runs the element or flow validator.
/// Expression errors are reported as ValidationError naming the entry.
LoadedMap load_map(const MapDocument& doc);

MapDocument to_document(const JonqElement& g);
MapDocument to_document(const AdditiveFlow& flow);

/// {"dim": 3, "structure": [[1, 2, 3, 1], ...]}: rows (i, j, k, c) meaning
/// c_ij^k = c; c is an integer or a rational string such as "1/2".
NilpotentAlgebra parse_algebra(std::string_view json_text);

}  // namespace jonq
