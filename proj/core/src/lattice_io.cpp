#include "omlprob/lattice_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace omlprob {

namespace {

const std::string& as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

}  // namespace

RawLattice lattice_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("lattice file must hold a JSON object");
  static const std::set<std::string> known = {"elements", "leq", "covers", "comp", "bot", "top"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw FormatError("unknown key '" + key + "' in lattice file");
  }
  for (const char* required : {"elements", "comp", "bot", "top"}) {
    if (!j.contains(required)) throw FormatError(std::string("missing key '") + required + "'");
  }
  if (j.contains("leq") == j.contains("covers")) {
    throw FormatError("lattice file needs exactly one of 'leq' or 'covers'");
  }

  RawLattice raw;
  if (!j["elements"].is_array()) throw FormatError("'elements' must be an array");
  for (const auto& e : j["elements"]) raw.elements.push_back(as_string(e, "element"));

  raw.order_is_covers = j.contains("covers");
  const auto& order = raw.order_is_covers ? j["covers"] : j["leq"];
  if (!order.is_array()) throw FormatError("order relation must be an array of pairs");
  for (const auto& pair : order) {
    if (!pair.is_array() || pair.size() != 2) throw FormatError("order entries must be [x, y] pairs");
    raw.order.emplace_back(as_string(pair[0], "order entry"), as_string(pair[1], "order entry"));
  }

  if (!j["comp"].is_object()) throw FormatError("'comp' must be an object");
  for (const auto& [from, to] : j["comp"].items()) raw.comp[from] = as_string(to, "complement");

  raw.bot = as_string(j["bot"], "'bot'");
  raw.top = as_string(j["top"], "'top'");
  return raw;
}

Json lattice_to_json(const Oml& l) {
  Json j;
  j["elements"] = l.names();
  auto covers = Json::array();
  for (auto [a, b] : l.covers()) covers.push_back({l.name(a), l.name(b)});
  j["covers"] = std::move(covers);
  auto comp = Json::object();
  for (Elem x = 0; x < l.size(); ++x) comp[l.name(x)] = l.name(l.ocomp(x));
  j["comp"] = std::move(comp);
  j["bot"] = l.name(l.bot());
  j["top"] = l.name(l.top());
  return j;
}

RawLattice parse_lattice(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return lattice_from_json(j);
}

Oml load_lattice(const std::filesystem::path& path) {
  return make_oml(parse_lattice(read_file(path)));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace omlprob
