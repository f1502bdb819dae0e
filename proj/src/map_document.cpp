#include "jonq/map_document.hpp"

#include <json.hpp>

#include "jonq/errors.hpp"
#include "jonq/expr.hpp"

namespace jonq {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

MapDocument document_from(const json& j) {
  if (!j.is_object()) throw ValidationError("map document must be a JSON object");
  for (const char* key : {"n", "variant", "entries"})
    if (!j.contains(key)) throw ValidationError(std::string("map document missing \"") + key + "\"");
  MapDocument doc;
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0) throw ValidationError("\"n\" must be a positive integer");
  doc.n = j["n"].get<std::size_t>();
  if (!j["variant"].is_string()) throw ValidationError("\"variant\" must be a string");
  doc.variant = j["variant"].get<std::string>();
  if (doc.variant != "J" && doc.variant != "Jhat" && doc.variant != "flow")
    throw ValidationError("unknown variant \"" + doc.variant + "\"");
  if (!j["entries"].is_array()) throw ValidationError("\"entries\" must be an array");
  if (j["entries"].size() != doc.n)
    throw ValidationError("expected " + std::to_string(doc.n) + " entries, found " + std::to_string(j["entries"].size()));
  std::size_t i = 0;
  for (const auto& e : j["entries"]) {
    ++i;
    if (!e.is_object() || !e.contains("f") || !e["f"].is_string())
      throw ValidationError("entry " + std::to_string(i) + " needs a string \"f\"", i);
    MapEntry entry{std::nullopt, e["f"].get<std::string>()};
    if (e.contains("mu")) {
      if (doc.variant == "flow") throw ValidationError("flow entry " + std::to_string(i) + " must not have \"mu\"", i);
      if (!e["mu"].is_string()) throw ValidationError("entry " + std::to_string(i) + " \"mu\" must be a string", i);
      entry.mu = e["mu"].get<std::string>();
    } else if (doc.variant != "flow") {
      throw ValidationError("entry " + std::to_string(i) + " needs \"mu\"", i);
    }
    doc.entries.push_back(std::move(entry));
  }
  return doc;
}

RatFunc parse_entry(const std::string& text, const char* field, std::size_t i) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ValidationError(std::string(field) + "_" + std::to_string(i) + ": " + e.what(), i);
  }
}

Rational parse_constant(const json& c) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_string()) {
    const RatFunc r = parse(c.get<std::string>());
    if (r.is_constant()) return r.constant_value();
  }
  throw ValidationError("structure constant must be an integer or a rational string");
}

}  // namespace

MapDocument parse_map_document(std::string_view json_text) { return document_from(parse_json(json_text)); }

std::vector<MapDocument> parse_map_documents(std::string_view json_text) {
  json j = parse_json(json_text);
  if (j.is_object() && j.contains("flows")) j = j["flows"];
  std::vector<MapDocument> docs;
  if (j.is_array()) {
    for (const auto& d : j) docs.push_back(document_from(d));
  } else {
    docs.push_back(document_from(j));
  }
  return docs;
}

std::string serialize(const MapDocument& doc) {
  ordered_json j;
  j["n"] = doc.n;
  j["variant"] = doc.variant;
  j["entries"] = ordered_json::array();
  for (const auto& e : doc.entries) {
    ordered_json entry;
    if (e.mu) entry["mu"] = *e.mu;
    entry["f"] = e.f;
    j["entries"].push_back(std::move(entry));
  }
  return j.dump(2);
}

LoadedMap load_map(const MapDocument& doc) {
  if (doc.entries.size() != doc.n) throw ValidationError("entry count does not match n");
  if (doc.variant == "flow") {
    AdditiveFlow flow{doc.n, {}};
    for (std::size_t i = 1; i <= doc.n; ++i) flow.F.push_back(parse_entry(doc.entries[i - 1].f, "F", i));
    validate_flow(flow);
    return flow;
  }
  const Variant variant = doc.variant == "J" ? Variant::J : doc.variant == "Jhat" ? Variant::Jhat
                                                                                 : throw ValidationError("unknown variant \"" + doc.variant + "\"");
  std::vector<Component> comps;
  for (std::size_t i = 1; i <= doc.n; ++i) {
    const MapEntry& e = doc.entries[i - 1];
    if (!e.mu) throw ValidationError("entry " + std::to_string(i) + " needs \"mu\"", i);
    comps.push_back(Component{parse_entry(*e.mu, "mu", i), parse_entry(e.f, "f", i)});
  }
  return JonqElement(variant, std::move(comps));
}

MapDocument to_document(const JonqElement& g) {
  MapDocument doc{g.dimension(), to_string(g.variant()), {}};
  for (const auto& c : g.components()) doc.entries.push_back(MapEntry{render(c.multiplier), render(c.increment)});
  return doc;
}

MapDocument to_document(const AdditiveFlow& flow) {
  MapDocument doc{flow.n, "flow", {}};
  for (const auto& f : flow.F) doc.entries.push_back(MapEntry{std::nullopt, render(f)});
  return doc;
}

NilpotentAlgebra parse_algebra(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
    throw ValidationError("algebra needs a positive integer \"dim\"");
  NilpotentAlgebra g(j["dim"].get<std::size_t>());
  if (j.contains("structure")) {
    if (!j["structure"].is_array()) throw ValidationError("\"structure\" must be an array");
    for (const auto& row : j["structure"]) {
      if (!row.is_array() || row.size() != 4 || !row[0].is_number_unsigned() || !row[1].is_number_unsigned() ||
          !row[2].is_number_unsigned())
        throw ValidationError("structure rows are [i, j, k, c] with positive integer indices");
      g.set(row[0].get<std::size_t>(), row[1].get<std::size_t>(), row[2].get<std::size_t>(), parse_constant(row[3]));
    }
  }
  return g;
}

}  // namespace jonq
