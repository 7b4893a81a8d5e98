#include "omlprob/bimap_io.hpp"

#include <set>

namespace omlprob {

namespace {

/// Splits "x|y" at the unique '|' leaving two element names.
std::pair<Elem, Elem> split_key(const Oml& l, const std::string& key) {
  std::optional<std::pair<Elem, Elem>> found;
  for (std::size_t pos = key.find('|'); pos != std::string::npos; pos = key.find('|', pos + 1)) {
    const auto a = l.find(key.substr(0, pos));
    const auto b = l.find(key.substr(pos + 1));
    if (!a || !b) continue;
    if (found) throw FormatError("ambiguous pair key '" + key + "'");
    found = std::pair{*a, *b};
  }
  if (!found) throw FormatError("pair key '" + key + "' does not name two elements");
  return *found;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::optional<std::string> map_lattice_ref(const Json& j) {
  if (!j.is_object() || !j.contains("lattice")) return std::nullopt;
  if (!j["lattice"].is_string()) throw FormatError("'lattice' must be a string");
  return j["lattice"].get<std::string>();
}

BiMap bimap_from_json(std::shared_ptr<const Oml> lattice, const Json& j) {
  if (!j.is_object()) throw FormatError("map file must hold a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "lattice" && key != "values")
      throw FormatError("unknown key '" + key + "' in map file");
  if (!j.contains("values") || !j["values"].is_object())
    throw FormatError("map file needs a 'values' object");

  const Oml& l = *lattice;
  const std::size_t n = l.size();
  std::vector<Rat> values(n * n);
  std::vector<char> seen(n * n, 0);
  for (const auto& [key, value] : j["values"].items()) {
    const auto [a, b] = split_key(l, key);
    if (!value.is_string()) throw FormatError("map values must be \"p/q\" strings");
    try {
      values[a * n + b] = Rat::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError("value of '" + key + "': " + e.what());
    }
    seen[a * n + b] = 1;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!seen[a * n + b])
        throw FormatError("map has no value for '" + l.name(a) + "|" + l.name(b) + "'");
  return BiMap(std::move(lattice), std::move(values));
}

Json bimap_to_json(const BiMap& m, const std::string& lattice_ref) {
  const Oml& l = m.lattice();
  Json j = Json::object();
  j["lattice"] = lattice_ref;
  Json values = Json::object();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) values[l.name(a) + "|" + l.name(b)] = m(a, b).str();
  j["values"] = std::move(values);
  return j;
}

LoadedMap load_bimap(const std::filesystem::path& path, std::shared_ptr<const Oml> lattice) {
  const Json j = parse_json(read_file(path));
  if (!lattice) {
    const auto ref = map_lattice_ref(j);
    if (!ref) throw FormatError("map file names no lattice and none was given");
    std::filesystem::path lp(*ref);
    if (lp.is_relative()) lp = path.parent_path() / lp;
    lattice = std::make_shared<const Oml>(load_lattice(lp));
  }
  BiMap m = bimap_from_json(lattice, j);
  return {std::move(lattice), std::move(m)};
}

}  // namespace omlprob
