#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "omlprob/analysis.hpp"
#include "omlprob/lattice.hpp"
#include "omlprob/lattice_io.hpp"
#include "oracle.hpp"

using namespace omlprob;

namespace {

std::vector<Oml> generated() {
  std::vector<Oml> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(boolean_algebra(n));
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(mo(n));
  const std::vector<Oml> parts = {boolean_algebra(2), boolean_algebra(3), mo(2)};
  out.push_back(horizontal_sum(parts));
  for (auto& [name, l] : builtin_suite()) out.push_back(l);
  return out;
}

RawLattice hexagon() {
  // 0 < a < b < 1 and 0 < b' < a' < 1: orthocomplemented, not orthomodular.
  RawLattice raw;
  raw.elements = {"0", "a", "b", "b'", "a'", "1"};
  raw.order = {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}};
  raw.order_is_covers = true;
  raw.comp = {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}, {"b", "b'"}, {"b'", "b"}};
  return raw;
}

RawLattice b2_raw() {
  RawLattice raw;
  raw.elements = {"0", "x", "y", "1"};
  raw.order = {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}};
  raw.order_is_covers = true;
  raw.comp = {{"0", "1"}, {"1", "0"}, {"x", "y"}, {"y", "x"}};
  return raw;
}

LatticeFault fault_of(const RawLattice& raw, std::size_t max = 64) {
  auto r = validate_oml(raw, max);
  REQUIRE(std::holds_alternative<LatticeViolation>(r));
  return std::get<LatticeViolation>(r).fault;
}

}  // namespace

TEST_CASE("boolean_algebra matches the power-set lattice") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Oml l = boolean_algebra(n);
    REQUIRE(l.size() == (1u << n));
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> m(l.size());
    for (Elem x = 0; x < l.size(); ++x) m[x] = oracle::boolean_mask(l.name(x), n);
    CHECK(std::set<std::uint32_t>(m.begin(), m.end()).size() == l.size());
    for (Elem a = 0; a < l.size(); ++a) {
      CHECK(m[l.ocomp(a)] == (full & ~m[a]));
      for (Elem b = 0; b < l.size(); ++b) {
        CHECK(l.leq(a, b) == ((m[a] & ~m[b]) == 0));
        CHECK(m[l.meet(a, b)] == (m[a] & m[b]));
        CHECK(m[l.join(a, b)] == (m[a] | m[b]));
        CHECK(l.compatible(a, b));
      }
    }
    CHECK(blocks(l).size() == 1);
  }
}

TEST_CASE("mo(n) has the expected order and pair relations") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Oml l = mo(n);
    REQUIRE(l.size() == 2 * n + 2);
    CHECK(blocks(l).size() == n);
    const Elem a = l.at("a"), ac = l.at("a'"), b = l.at("b");
    CHECK(l.ocomp(a) == ac);
    CHECK(l.meet(a, b) == l.bot());
    CHECK(l.join(a, b) == l.top());
    CHECK(l.classify_pair(a, ac).tag == PairRelation::Orthogonal);
    CHECK(l.classify_pair(a, b).tag == PairRelation::Incompatible);
    CHECK(l.classify_pair(a, a).tag == PairRelation::Compatible);
    CHECK(l.classify_pair(a, l.top()).tag == PairRelation::Compatible);
  }
  const auto bl = blocks(mo(3));
  CHECK(bl.size() == 3);
  for (const auto& blk : bl) CHECK(blk.size() == 4);
}

TEST_CASE("horizontal sums of four-element blocks are the MO lattices") {
  const std::vector<Oml> three(3, boolean_algebra(2));
  const Oml s = horizontal_sum(three);
  CHECK(oracle::isomorphic(s, mo(3)));
  CHECK_FALSE(oracle::isomorphic(s, boolean_algebra(3)));
  const std::vector<Oml> too_small = {boolean_algebra(1), boolean_algebra(2)};
  CHECK_THROWS_AS(horizontal_sum(too_small), PartTooSmall);
}

TEST_CASE("horizontal sum: interiors of different parts are incompatible") {
  const std::vector<Oml> parts = {boolean_algebra(2), boolean_algebra(3), mo(2)};
  const Oml s = horizontal_sum(parts);
  REQUIRE(s.size() == 2 + 2 + 6 + 4);
  // Part index of each interior element, recovered from the part sizes.
  std::vector<int> part(s.size(), -1);
  std::size_t next = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t k = 0; k + 2 < parts[i].size(); ++k) {
      while (next == s.bot() || next == s.top()) ++next;
      part[next++] = static_cast<int>(i);
    }
  }
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      if (part[x] >= 0 && part[y] >= 0 && part[x] != part[y])
        CHECK(s.classify_pair(x, y).tag == PairRelation::Incompatible);
}

TEST_CASE("properties on every generated lattice") {
  for (const Oml& l : generated()) {
    CAPTURE(describe(l));
    CHECK(std::holds_alternative<Oml>(validate_oml(l.to_raw())));
    for (Elem a = 0; a < l.size(); ++a) {
      for (Elem b = 0; b < l.size(); ++b) {
        CHECK(l.ocomp(l.join(a, b)) == l.meet(l.ocomp(a), l.ocomp(b)));
        CHECK(l.compatible(a, b) == l.compatible(b, a));
        const PairClass c = l.classify_pair(a, b);
        CHECK((c.tag == PairRelation::Orthogonal) == l.leq(a, l.ocomp(b)));
        if (c.tag != PairRelation::Incompatible) {
          CHECK(c.meet_with == l.meet(a, b));
          CHECK(c.meet_with_complement == l.meet(a, l.ocomp(b)));
        }
      }
    }
    for (const auto& blk : blocks(l)) CHECK(is_boolean_subalgebra(l, blk));
  }
}

TEST_CASE("blocks are maximal Boolean subalgebras") {
  const Oml l = mo(2);
  const auto bl = blocks(l);
  REQUIRE(bl.size() == 2);
  // Brute force: every Boolean subalgebra is contained in some block.
  for (std::uint32_t mask = 0; mask < (1u << l.size()); ++mask) {
    std::vector<Elem> sub;
    for (Elem x = 0; x < l.size(); ++x)
      if (mask & (1u << x)) sub.push_back(x);
    if (!is_boolean_subalgebra(l, sub)) continue;
    bool covered = false;
    for (const auto& blk : bl)
      covered = covered || std::includes(blk.begin(), blk.end(), sub.begin(), sub.end());
    CHECK(covered);
  }
}

TEST_CASE("orthogonal partitions of unity match brute force") {
  for (const Oml& l : {mo(2), boolean_algebra(3), mo(3)}) {
    std::set<std::vector<Elem>> expected;
    const std::size_t n = l.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Elem> s;
      bool ok = true;
      Elem j = l.bot();
      for (Elem x = 0; x < n && ok; ++x) {
        if (!(mask & (1u << x))) continue;
        ok = x != l.bot();
        for (Elem y : s) ok = ok && l.leq(x, l.ocomp(y));
        s.push_back(x);
        j = l.join(j, x);
      }
      if (ok && j == l.top()) expected.insert(s);
    }
    const auto got = orthogonal_partitions_of_unity(l);
    CHECK(std::set<std::vector<Elem>>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("invalid lattices report the failing axiom") {
  CHECK(fault_of(hexagon()) == LatticeFault::OrthomodularLawFailure);
  {
    auto r = validate_oml(hexagon());
    const auto& v = std::get<LatticeViolation>(r);
    CHECK(v.axiom == 4);
    CHECK(v.witnesses.size() == 2);
  }
  {
    RawLattice raw = b2_raw();
    raw.comp["x"] = "x";
    CHECK(fault_of(raw) == LatticeFault::ComplementAxiom);
  }
  {
    RawLattice raw = b2_raw();
    raw.comp["0"] = "x";
    CHECK(fault_of(raw) == LatticeFault::ComplementAxiom);
  }
  {
    RawLattice raw = b2_raw();
    raw.order.push_back({"1", "x"});
    CHECK(fault_of(raw) == LatticeFault::NotAPartialOrder);
  }
  {
    RawLattice raw = b2_raw();
    raw.elements.push_back("z");
    raw.comp["z"] = "z";
    CHECK(fault_of(raw) == LatticeFault::BoundsViolation);
  }
  {
    // Two incomparable upper bounds of x, y below 1: no join.
    RawLattice raw;
    raw.elements = {"0", "x", "y", "u", "v", "1"};
    raw.order = {{"0", "x"}, {"0", "y"}, {"x", "u"}, {"y", "u"}, {"x", "v"}, {"y", "v"}, {"u", "1"}, {"v", "1"}};
    raw.order_is_covers = true;
    raw.comp = {{"0", "1"}, {"1", "0"}, {"x", "u"}, {"u", "x"}, {"y", "v"}, {"v", "y"}};
    CHECK(fault_of(raw) == LatticeFault::NotALattice);
  }
  {
    RawLattice raw = b2_raw();
    raw.comp.erase("y");
    CHECK(fault_of(raw) == LatticeFault::Malformed);
  }
  CHECK(fault_of(b2_raw(), 3) == LatticeFault::TooLarge);
  CHECK_THROWS_AS(make_oml(hexagon()), LatticeError);
}

TEST_CASE("the element bound can be raised through the environment") {
  CHECK(default_max_elements() == 64);
  ::setenv("OMLPROB_MAX_ELEMENTS", "3", 1);
  CHECK(default_max_elements() == 3);
  CHECK(fault_of(b2_raw(), default_max_elements()) == LatticeFault::TooLarge);
  ::setenv("OMLPROB_MAX_ELEMENTS", "junk", 1);
  CHECK(default_max_elements() == 64);
  ::unsetenv("OMLPROB_MAX_ELEMENTS");
}

TEST_CASE("full order and covering pairs give the same lattice") {
  const Oml l = mo(3);
  RawLattice raw = l.to_raw();
  raw.order.clear();
  raw.order_is_covers = false;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.leq(a, b)) raw.order.push_back({l.name(a), l.name(b)});
  CHECK(make_oml(raw) == l);
}

TEST_CASE("lattice JSON round-trips") {
  for (const Oml& l : generated()) {
    const Json j = lattice_to_json(l);
    CHECK(make_oml(lattice_from_json(j)) == l);
    CHECK(make_oml(parse_lattice(j.dump())) == l);
  }
}

TEST_CASE("lattice JSON errors are format errors") {
  CHECK_THROWS_AS(parse_lattice("{"), FormatError);
  CHECK_THROWS_AS(parse_lattice(R"({"elements":["0","1"],"comp":{"0":"1","1":"0"},"bot":"0","top":"1"})"),
                  FormatError);
  CHECK_THROWS_AS(
      parse_lattice(R"({"elements":["0","1"],"covers":[["0","1"]],"leq":[],"comp":{},"bot":"0","top":"1"})"),
      FormatError);
  CHECK_THROWS_AS(parse_lattice(R"({"elements":["0","1"],"covers":[["0","1"]],"comp":{"0":"1","1":"0"},)"
                                R"("bot":"0","top":"1","extra":1})"),
                  FormatError);
  CHECK_THROWS_AS(parse_lattice(R"({"elements":[0,1],"covers":[],"comp":{},"bot":"0","top":"1"})"),
                  FormatError);
}
