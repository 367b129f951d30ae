#include "document.hpp"

#include <fstream>
#include <sstream>

#include "radii/errors.hpp"

namespace radii::cli {

using nlohmann::json;

namespace {

class FieldError {
 public:
  explicit FieldError(std::string_view source) : source_(source) {}
  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw InputError(source_ + ": " + field + ": " + message);
  }

 private:
  std::string source_;
};

Scalar parse_scalar(const json& j, const std::string& field, const FieldError& err) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const InputError& e) {
      err.fail(field, e.what());
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Scalar::parse(std::to_string(j.get<unsigned long long>()))
                                  : Scalar(j.get<long long>());
  }
  if (j.is_number_float()) err.fail(field, "floating-point numbers are not exact; write the value as a string");
  err.fail(field, "expected a rational as a string or an integer");
}

Vector parse_row(const json& j, size_t dim, const std::string& field, const FieldError& err) {
  if (!j.is_array()) err.fail(field, "expected an array of " + std::to_string(dim) + " scalars");
  if (j.size() != dim) {
    err.fail(field, "expected " + std::to_string(dim) + " coordinates, found " + std::to_string(j.size()));
  }
  Vector v(dim);
  for (size_t i = 0; i < dim; ++i) v[i] = parse_scalar(j[i], field + "[" + std::to_string(i) + "]", err);
  return v;
}

}  // namespace

PolytopeDocument parse_document(std::string_view text, std::string_view source) {
  const FieldError err(source);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
  if (!j.is_object()) err.fail("document", "expected a JSON object");

  PolytopeDocument doc;
  if (!j.contains("kind")) err.fail("kind", "missing");
  if (!j["kind"].is_string() || (j["kind"] != "V" && j["kind"] != "H")) err.fail("kind", "must be \"V\" or \"H\"");
  doc.kind = j["kind"].get<std::string>()[0];

  if (!j.contains("dim")) err.fail("dim", "missing");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<unsigned long long>() == 0) {
    err.fail("dim", "must be a positive integer");
  }
  doc.dim = j["dim"].get<size_t>();

  for (const auto& [key, _] : j.items()) {
    if (key != "kind" && key != "dim" && key != "vertices" && key != "halfspaces") {
      err.fail(key, "unknown field");
    }
  }

  if (doc.kind == 'V') {
    if (j.contains("halfspaces")) err.fail("halfspaces", "not allowed in a V document");
    if (!j.contains("vertices") || !j["vertices"].is_array()) err.fail("vertices", "missing or not an array");
    const json& rows = j["vertices"];
    if (rows.empty()) err.fail("vertices", "at least one vertex is required");
    for (size_t i = 0; i < rows.size(); ++i) {
      doc.vertices.push_back(parse_row(rows[i], doc.dim, "vertices[" + std::to_string(i) + "]", err));
    }
  } else {
    if (j.contains("vertices")) err.fail("vertices", "not allowed in an H document");
    if (!j.contains("halfspaces") || !j["halfspaces"].is_array()) err.fail("halfspaces", "missing or not an array");
    const json& rows = j["halfspaces"];
    for (size_t i = 0; i < rows.size(); ++i) {
      const std::string field = "halfspaces[" + std::to_string(i) + "]";
      const json& h = rows[i];
      if (!h.is_object()) err.fail(field, "expected an object with \"normal\" and \"offset\"");
      if (!h.contains("normal")) err.fail(field + ".normal", "missing");
      if (!h.contains("offset")) err.fail(field + ".offset", "missing");
      Vector normal = parse_row(h["normal"], doc.dim, field + ".normal", err);
      if (normal.is_zero()) err.fail(field + ".normal", "must be nonzero");
      doc.halfspaces.push_back({std::move(normal), parse_scalar(h["offset"], field + ".offset", err)});
    }
  }
  return doc;
}

PolytopeDocument read_document(const std::string& path, std::string* raw) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (raw) *raw = text;
  return parse_document(text, path);
}

VPolytope to_vpolytope(const PolytopeDocument& doc) {
  if (doc.kind == 'V') return reduce_v(doc.dim, doc.vertices);
  return h_to_v(HPolytope(doc.dim, doc.halfspaces));
}

nlohmann::ordered_json to_document(const VPolytope& p) {
  nlohmann::ordered_json doc;
  doc["kind"] = "V";
  doc["dim"] = p.dim();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& v : p.vertices()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& c : v) row.push_back(c.str());
    rows.push_back(std::move(row));
  }
  doc["vertices"] = std::move(rows);
  return doc;
}

}  // namespace radii::cli
