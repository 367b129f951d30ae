#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "radii/polytope.hpp"

namespace radii::cli {

/// {"kind":"V","dim":n,"vertices":[[..],..]} or
/// {"kind":"H","dim":n,"halfspaces":[{"normal":[..],"offset":".."},..]}.
/// Scalars are strings ("p", "p/q", decimal) or JSON integers.
struct PolytopeDocument {
  char kind = 'V';
  size_t dim = 0;
  std::vector<Vector> vertices;
  std::vector<Halfspace> halfspaces;
};

/// InputError whose message starts with "<source>: " and names the field.
PolytopeDocument parse_document(std::string_view text, std::string_view source);

/// Reads and parses a file. InputError if it cannot be read.
PolytopeDocument read_document(const std::string& path, std::string* raw = nullptr);

/// Vertices of the described polytope; H-documents are converted.
VPolytope to_vpolytope(const PolytopeDocument& doc);

/// V-document with exact rational text.
nlohmann::ordered_json to_document(const VPolytope& p);

}  // namespace radii::cli
