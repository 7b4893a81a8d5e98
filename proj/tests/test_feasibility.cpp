#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "omlprob/feasibility.hpp"
#include "oracle.hpp"

using namespace omlprob;

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LinSystem box_system(std::size_t n, const Rat& lo, const Rat& hi) {
  LinSystem s;
  for (std::size_t i = 0; i < n; ++i) s.add_bounds(s.add_var("x" + std::to_string(i)), lo, hi);
  return s;
}

/// Bounded random system: a box plus a few random cuts, sometimes with an
/// equality.
LinSystem random_system(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-2, 6), coin(0, 3);
  LinSystem s = box_system(n, Rat(0), Rat(3));
  const int cuts = 1 + coin(rng);
  for (int k = 0; k < cuts; ++k) {
    Terms t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, Rat(coef(rng))});
    s.add_le(t, Rat(rhs(rng)));
  }
  if (coin(rng) == 0) {
    Terms t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, Rat(coef(rng))});
    s.add_eq(t, Rat(rhs(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("a textbook LP") {
  LinSystem s = box_system(2, Rat(0), Rat(3));
  s.add_le({{0, Rat(1)}}, Rat(2));
  s.add_le({{0, Rat(1)}, {1, Rat(1)}}, Rat(4));
  const Polyhedron p(s);
  const LpResult r = p.maximize({Rat(1), Rat(1)}, true);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(4));
  REQUIRE(r.certificate);
  CHECK(verify_certificate(s, {Rat(1), Rat(1)}, *r.certificate));
  CHECK(r.certificate->bound == Rat(4));

  const LpResult lo = p.minimize({Rat(1), Rat(-2)}, true);
  CHECK(lo.value == Rat(-6));
  REQUIRE(lo.certificate);
  CHECK(verify_certificate(s, {Rat(-1), Rat(2)}, *lo.certificate));

  const auto v = enumerate_vertices(s, 100);
  const std::vector<RatVec> expected = {{Rat(0), Rat(0)}, {Rat(0), Rat(3)}, {Rat(1), Rat(3)},
                                        {Rat(2), Rat(0)}, {Rat(2), Rat(2)}};
  CHECK(v.vertices == expected);
  CHECK_FALSE(v.cap_exceeded);
}

TEST_CASE("random polytopes agree with brute-force basis enumeration") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t n = 2 + iter % 3;
    const LinSystem s = random_system(rng, n);
    CAPTURE(s.dump());
    const auto oracle = oracle::brute_vertices(s);
    const PolyInfo info = solve(s);
    if (oracle.empty) {
      CHECK(info.status == PolyStatus::Empty);
      CHECK(info.dim == -1);
      CHECK(enumerate_vertices(s, 1000).vertices.empty());
      continue;
    }
    CHECK(info.dim == oracle.dim);
    CHECK(info.status == (oracle.dim == 0 ? PolyStatus::Point : PolyStatus::PositiveDimensional));
    REQUIRE(info.witness);
    CHECK(s.satisfied_by(*info.witness));

    const auto v = enumerate_vertices(s, 1000);
    CHECK(v.vertices == oracle.vertices);
    for (const auto& x : v.vertices) CHECK(s.satisfied_by(x));

    const Polyhedron p(s);
    for (int k = 0; k < 3; ++k) {
      std::uniform_int_distribution<int> c(-4, 4);
      RatVec obj(n);
      for (auto& x : obj) x = Rat(c(rng));
      Rat best = dot(obj, oracle.vertices.front());
      for (const auto& x : oracle.vertices) best = std::max(best, dot(obj, x));
      const LpResult r = p.maximize(obj, true);
      REQUIRE(r.status == LpStatus::Optimal);
      CHECK(r.value == best);
      CHECK(s.satisfied_by(r.point));
      CHECK(dot(obj, r.point) == best);
      REQUIRE(r.certificate);
      CHECK(verify_certificate(s, obj, *r.certificate));
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  LinSystem s = box_system(2, Rat(0), Rat(1));
  s.add_eq({{0, Rat(1)}, {1, Rat(-1)}}, Rat(0));
  const RatVec obj = {Rat(1), Rat(2)};
  const LpResult r = Polyhedron(s).maximize(obj, true);
  REQUIRE(r.certificate);
  CHECK(r.value == Rat(3));
  CHECK(verify_certificate(s, obj, *r.certificate));

  DualCertificate low = *r.certificate;
  low.bound = Rat(5, 2);
  CHECK_FALSE(verify_certificate(s, obj, low));

  DualCertificate neg = *r.certificate;
  neg.ineq_multipliers.assign(neg.ineq_multipliers.size(), Rat(0));
  neg.ineq_multipliers[0] = Rat(-1);
  CHECK_FALSE(verify_certificate(s, obj, neg));
}

TEST_CASE("implicit equalities reduce the dimension") {
  LinSystem s = box_system(3, Rat(0), Rat(1));
  s.add_le({{0, Rat(1)}, {1, Rat(-1)}}, Rat(0));
  s.add_le({{1, Rat(1)}, {0, Rat(-1)}}, Rat(0));
  const PolyInfo info = solve(s);
  CHECK(info.dim == 2);
  CHECK(Polyhedron(s).implicit_equalities().size() == 2);

  LinSystem pt = box_system(2, Rat(0), Rat(1));
  pt.add_le({{0, Rat(1)}, {1, Rat(1)}}, Rat(0));
  const PolyInfo p = solve(pt);
  CHECK(p.status == PolyStatus::Point);
  CHECK(p.dim == 0);
  CHECK(*p.witness == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("infeasible and unbounded systems") {
  LinSystem s = box_system(2, Rat(0), Rat(1));
  s.add_ge({{0, Rat(1)}, {1, Rat(1)}}, Rat(3));
  CHECK(solve(s).status == PolyStatus::Empty);
  CHECK(Polyhedron(s).maximize({Rat(1), Rat(0)}).status == LpStatus::Infeasible);
  const auto ir = certify_implied(s, {{Rat(1), Rat(0)}, Rat(-5)});
  CHECK(ir.vacuous);
  CHECK(ir.implied);

  LinSystem ray;
  ray.add_var("x");
  ray.add_var("y");
  ray.add_ge({{0, Rat(1)}}, Rat(0));
  ray.add_ge({{1, Rat(1)}}, Rat(0));
  CHECK(Polyhedron(ray).maximize({Rat(1), Rat(1)}).status == LpStatus::Unbounded);
  CHECK(Polyhedron(ray).maximize({Rat(-1), Rat(-1)}).value == Rat(0));
  CHECK_THROWS_AS(enumerate_vertices(ray, 10), Unbounded);
  CHECK_THROWS_AS(certify_implied(ray, {{Rat(1), Rat(0)}, Rat(7)}), Unbounded);
  CHECK(solve(ray).dim == 2);
}

TEST_CASE("vertex cap keeps the lexicographically first vertices") {
  const LinSystem cube = box_system(4, Rat(0), Rat(1));
  const auto all = enumerate_vertices(cube, 100);
  REQUIRE(all.vertices.size() == 16);
  CHECK(std::is_sorted(all.vertices.begin(), all.vertices.end()));
  const auto capped = enumerate_vertices(cube, 5);
  CHECK(capped.cap_exceeded);
  CHECK(capped.vertices == std::vector<RatVec>(all.vertices.begin(), all.vertices.begin() + 5));
}

TEST_CASE("solve is deterministic") {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const LinSystem s = random_system(rng, 3);
    const PolyInfo a = solve(s), b = solve(s);
    CHECK(a.status == b.status);
    CHECK(a.dim == b.dim);
    CHECK(a.witness == b.witness);
    CHECK(enumerate_vertices(s, 100).vertices == enumerate_vertices(s, 100).vertices);
  }
}

TEST_CASE("implied targets hold at every vertex; refuted ones fail at the maximiser") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-3, 3), r(-2, 8);
  for (int i = 0; i < 100; ++i) {
    const LinSystem s = random_system(rng, 3);
    LinConstraint t{{Rat(c(rng)), Rat(c(rng)), Rat(c(rng))}, Rat(r(rng))};
    const ImpliedResult ir = certify_implied(s, t);
    const auto verts = enumerate_vertices(s, 1000).vertices;
    if (ir.vacuous) {
      CHECK(verts.empty());
      continue;
    }
    bool all = true;
    for (const auto& v : verts) all = all && dot(t.coeffs, v) <= t.rhs;
    CHECK(ir.implied == all);
    CHECK(dot(t.coeffs, ir.point) == ir.max_value);
    if (!ir.implied) CHECK(dot(t.coeffs, ir.point) > t.rhs);
    REQUIRE(ir.certificate);
    CHECK(verify_certificate(s, t.coeffs, *ir.certificate));
  }
}

TEST_CASE("restrict adds constraints on top of a preprocessed system") {
  const LinSystem s = box_system(3, Rat(0), Rat(1));
  const Polyhedron p(s);
  const Polyhedron q = p.restrict({{{Rat(1), Rat(1), Rat(1)}, Rat(1)}}, {{{Rat(1), Rat(0), Rat(0)}, Rat(1, 2)}});
  CHECK(q.info().dim == 2);
  const LpResult r = q.maximize({Rat(1), Rat(0), Rat(0)}, true);
  CHECK(r.value == Rat(1, 2));
  LinSystem full = s;
  full.eqs.push_back({{Rat(1), Rat(1), Rat(1)}, Rat(1)});
  full.ineqs.push_back({{Rat(1), Rat(0), Rat(0)}, Rat(1, 2)});
  REQUIRE(r.certificate);
  CHECK(verify_certificate(full, {Rat(1), Rat(0), Rat(0)}, *r.certificate));
  CHECK(q.system().eqs.size() == 1);
}

TEST_CASE("rank") {
  CHECK(rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rank({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}) == 2);
  CHECK(rank({}) == 0);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int i = 0; i < 50; ++i) {
    oracle::Matrix m(4, RatVec(5));
    for (auto& row : m)
      for (auto& x : row) x = Rat(d(rng));
    CHECK(rank(m) == oracle::rank(m));
  }
}
