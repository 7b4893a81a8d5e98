#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <memory>

#include "omlprob/bimap.hpp"
#include "omlprob/bimap_io.hpp"
#include "omlprob/lattice_io.hpp"

using namespace omlprob;
namespace fs = std::filesystem;

namespace {

std::shared_ptr<const Oml> share(Oml l) { return std::make_shared<const Oml>(std::move(l)); }

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_CASE("map JSON round-trips") {
  const auto l = share(mo(2));
  for (const BiMap& g : {build_table3_family(l, Rat(1, 3), Rat(2, 3), Rat(0), Rat(1)),
                         build_table3_family(l, Rat(1, 7), Rat(1), Rat(5, 11), Rat(0))}) {
    const Json j = bimap_to_json(g, "mo2.json");
    CHECK(j["lattice"] == "mo2.json");
    CHECK(j["values"].size() == 36);
    CHECK(j["values"]["a|b"] == g(l->at("a"), l->at("b")).str());
    CHECK(bimap_from_json(l, j) == g);
    CHECK(bimap_from_json(l, parse_json(j.dump())) == g);
    CHECK(map_lattice_ref(j) == "mo2.json");
  }
}

TEST_CASE("map files resolve their lattice relative to themselves") {
  const fs::path dir = fs::temp_directory_path() / "omlprob_bimap_io_test";
  fs::create_directories(dir / "sub");
  write(dir / "sub" / "mo2.json", lattice_to_json(mo(2)).dump());
  const auto l = share(mo(2));
  const BiMap g = build_table3_family(l, Rat(1, 3), Rat(2, 3), Rat(0), Rat(1));
  write(dir / "sub" / "g.json", bimap_to_json(g, "mo2.json").dump());
  const LoadedMap loaded = load_bimap(dir / "sub" / "g.json");
  CHECK(*loaded.lattice == *l);
  CHECK(loaded.map == g);
  CHECK(load_bimap(dir / "sub" / "g.json", l).map == g);

  write(dir / "nolattice.json", R"({"values":{}})");
  CHECK_THROWS_AS(load_bimap(dir / "nolattice.json"), FormatError);
  CHECK_THROWS(load_bimap(dir / "missing.json"));
  fs::remove_all(dir);
}

TEST_CASE("malformed map files") {
  const auto l = share(boolean_algebra(1));
  const Json ok = bimap_to_json(BiMap::constant(l, Rat(0)), "b.json");
  CHECK_NOTHROW(bimap_from_json(l, ok));

  Json missing = ok;
  missing["values"].erase("0|1");
  CHECK_THROWS_AS(bimap_from_json(l, missing), FormatError);

  Json extra = ok;
  extra["comment"] = "x";
  CHECK_THROWS_AS(bimap_from_json(l, extra), FormatError);

  Json bad_key = ok;
  bad_key["values"]["0|2"] = "0";
  CHECK_THROWS_AS(bimap_from_json(l, bad_key), FormatError);

  Json bad_value = ok;
  bad_value["values"]["0|1"] = "1/0";
  CHECK_THROWS_AS(bimap_from_json(l, bad_value), FormatError);

  Json number = ok;
  number["values"]["0|1"] = 0;
  CHECK_THROWS_AS(bimap_from_json(l, number), FormatError);

  CHECK_THROWS_AS(parse_json("{\"values\":"), FormatError);
  CHECK_THROWS_AS(bimap_from_json(l, Json::array()), FormatError);
}

TEST_CASE("pair keys split at the separator that names two elements") {
  RawLattice raw;
  raw.elements = {"0", "x", "x|x", "1"};
  raw.order = {{"0", "x"}, {"0", "x|x"}, {"x", "1"}, {"x|x", "1"}};
  raw.order_is_covers = true;
  raw.comp = {{"0", "1"}, {"1", "0"}, {"x", "x|x"}, {"x|x", "x"}};
  const auto l = share(make_oml(raw));
  const BiMap m = BiMap::from_function(l, [](Elem a, Elem b) { return Rat(static_cast<long>(a * 4 + b), 16); });
  Json j = bimap_to_json(m, "l.json");
  // "x|x|x" reads both as (x, x|x) and as (x|x, x).
  CHECK_THROWS_AS(bimap_from_json(l, j), FormatError);

  RawLattice raw2 = raw;
  raw2.elements = {"0", "x", "|y", "1"};
  raw2.order = {{"0", "x"}, {"0", "|y"}, {"x", "1"}, {"|y", "1"}};
  raw2.comp = {{"0", "1"}, {"1", "0"}, {"x", "|y"}, {"|y", "x"}};
  const auto l2 = share(make_oml(raw2));
  const BiMap m2 = BiMap::from_function(l2, [](Elem a, Elem b) { return Rat(static_cast<long>(a + b), 8); });
  CHECK(bimap_from_json(l2, bimap_to_json(m2, "l.json")) == m2);
}
