#include "gcomonad/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace gcomonad {

PointedStructure LoadedStructure::pointed() const {
  if (!point) throw StructureError("structure has no point");
  return PointedStructure{structure, *point};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructureError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_strict(std::string_view text) {
  // Each open object remembers the key it is the value of.
  std::vector<std::pair<std::set<std::string>, std::string>> keys;
  std::string last_key;
  std::string duplicate;
  auto cb = [&](int, json::parse_event_t ev, json& parsed) {
    switch (ev) {
      case json::parse_event_t::object_start:
        keys.emplace_back(std::set<std::string>{}, last_key);
        break;
      case json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case json::parse_event_t::key:
        last_key = parsed.get<std::string>();
        if (!keys.back().first.insert(last_key).second && duplicate.empty()) {
          const std::string& owner = keys.back().second;
          duplicate = (owner == "signature" || owner == "relations") && keys.size() == 2
                          ? "duplicate relation name " + last_key
                          : "duplicate key " + last_key;
        }
        break;
      default:
        break;
    }
    return true;
  };
  json j;
  try {
    j = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    throw StructureError(std::string("malformed JSON: ") + e.what());
  }
  if (!duplicate.empty()) throw StructureError(duplicate);
  return j;
}

namespace {

std::string as_id(const json& v, const char* what) {
  if (!v.is_string()) throw StructureError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

LoadedStructure parse_structure(std::string_view text) {
  const json j = parse_json_strict(text);
  if (!j.is_object()) throw StructureError("structure must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "signature" && key != "universe" && key != "relations" && key != "point")
      throw StructureError("unknown field " + key);
  }
  if (!j.contains("signature") || !j["signature"].is_object()) throw StructureError("missing signature object");
  if (!j.contains("universe") || !j["universe"].is_array()) throw StructureError("missing universe array");

  Signature sig;
  for (const auto& [name, arity] : j["signature"].items()) {
    if (!arity.is_number_integer()) throw StructureError("arity of " + name + " must be an integer");
    sig.add(name, arity.get<int>());
  }
  StructureBuilder builder(sig);
  for (const auto& e : j["universe"]) builder.element(as_id(e, "element id"));

  if (j.contains("relations")) {
    if (!j["relations"].is_object()) throw StructureError("relations must be an object");
    for (const auto& [name, tuples] : j["relations"].items()) {
      if (!sig.find(name)) throw StructureError("relation " + name + " not in signature");
      if (!tuples.is_array()) throw StructureError("relation " + name + " must be an array of tuples");
      for (const auto& t : tuples) {
        if (!t.is_array()) throw StructureError("tuple of " + name + " must be an array");
        std::vector<std::string> ids;
        for (const auto& e : t) ids.push_back(as_id(e, "element id"));
        builder.tuple(name, std::move(ids));
      }
    }
  }
  Structure s = builder.build();
  std::optional<Element> point;
  if (j.contains("point")) point = s.at(as_id(j["point"], "point"));
  return LoadedStructure{std::move(s), point};
}

LoadedStructure load_structure(const std::filesystem::path& path) { return parse_structure(read_file(path)); }

json structure_to_json(const Structure& s, std::optional<Element> point) {
  json j;
  j["signature"] = json::object();
  j["relations"] = json::object();
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    const auto& sym = s.signature()[r];
    j["signature"][sym.name] = sym.arity;
    json tuples = json::array();
    for (const auto& t : s.relation(r).tuples()) {
      json tj = json::array();
      for (Element e : t) tj.push_back(s.name(e));
      tuples.push_back(std::move(tj));
    }
    j["relations"][sym.name] = std::move(tuples);
  }
  j["universe"] = s.names();
  if (point) j["point"] = s.name(*point);
  return j;
}

}  // namespace gcomonad
