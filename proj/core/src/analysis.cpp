#include "omlprob/analysis.hpp"

#include <array>
#include <functional>
#include <stdexcept>

#include "omlprob/states.hpp"

namespace omlprob {

const char* to_string(Verdict v) { return v == Verdict::Implied ? "implied" : "violated"; }

bool certificates_valid(const PropertyVerdict& v) {
  for (const auto& inst : v.instances) {
    if (inst.vacuous) continue;
    if (!inst.certificate || inst.certificate->bound != inst.max) return false;
    LinSystem sys = *v.base;
    for (const auto& e : inst.premise) sys.eqs.push_back(e);
    if (!verify_certificate(sys, inst.objective, *inst.certificate)) return false;
  }
  for (const auto& r : v.related)
    if (!certificates_valid(r)) return false;
  return true;
}

namespace {

using Assign = std::function<std::vector<std::pair<std::string, Rat>>(const RatVec&)>;

struct Job {
  std::vector<Elem> elements;
  std::vector<LinConstraint> premise;
  RatVec objective;
  Rat threshold;
};

Assign state_assignment(const Oml& l) {
  return [&l](const RatVec& x) {
    std::vector<std::pair<std::string, Rat>> out;
    for (Elem a = 0; a < l.size(); ++a) out.emplace_back(l.name(a), x[a]);
    return out;
  };
}

Assign map_assignment(const Oml& l) {
  return [&l](const RatVec& x) {
    std::vector<std::pair<std::string, Rat>> out;
    const std::size_t n = l.size();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) out.emplace_back(l.name(a) + "|" + l.name(b), x[a * n + b]);
    return out;
  };
}

bool same_premise(const std::vector<LinConstraint>& a, const std::vector<LinConstraint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].rhs != b[i].rhs || a[i].coeffs != b[i].coeffs) return false;
  return true;
}

/// Runs every job against `poly` and fills in the verdict. With `negate`,
/// the witness value is -max (the objective was a negated minimisation).
PropertyVerdict run_jobs(std::string property, std::string scope, const Polyhedron& poly,
                         std::vector<Job> jobs, bool negate, const Assign& assign) {
  PropertyVerdict v;
  v.property = std::move(property);
  v.scope = std::move(scope);
  v.base = std::make_shared<const LinSystem>(poly.system());

  std::optional<std::pair<std::vector<LinConstraint>, Polyhedron>> restricted;
  std::optional<Rat> best_excess;
  RatVec best_point;
  std::size_t best_index = 0;
  for (auto& job : jobs) {
    CertifiedInstance inst;
    inst.elements = std::move(job.elements);
    inst.premise = std::move(job.premise);
    inst.objective = std::move(job.objective);
    inst.threshold = job.threshold;

    if (!inst.premise.empty() && (!restricted || !same_premise(restricted->first, inst.premise)))
      restricted.emplace(inst.premise, poly.restrict(inst.premise, {}));
    LpResult r = inst.premise.empty() ? poly.maximize(inst.objective, true)
                                      : restricted->second.maximize(inst.objective, true);
    if (r.status == LpStatus::Unbounded) throw Unbounded(v.property + ": unbounded objective");
    if (r.status == LpStatus::Infeasible) {
      inst.vacuous = true;
    } else {
      inst.max = r.value;
      inst.certificate = std::move(r.certificate);
      const Rat excess = inst.max - inst.threshold;
      if (excess.sign() > 0 && (!best_excess || excess > *best_excess)) {
        best_excess = excess;
        best_point = std::move(r.point);
        best_index = v.instances.size();
      }
    }
    v.instances.push_back(std::move(inst));
  }

  if (best_excess) {
    const auto& inst = v.instances[best_index];
    v.verdict = Verdict::Violated;
    v.witness = Witness{inst.elements, negate ? -inst.max : inst.max, assign(best_point)};
  }
  return v;
}

/// Dense objective from (coefficient, variable) terms, merging repeats.
RatVec objective(std::size_t size, std::initializer_list<std::pair<long, std::size_t>> terms) {
  RatVec c(size);
  for (auto [k, var] : terms) c[var] += Rat(k);
  return c;
}

LinConstraint fix(std::size_t size, std::size_t var, const Rat& value) {
  LinConstraint e{RatVec(size), value};
  e.coeffs[var] = Rat(1);
  return e;
}

}  // namespace

PropertyVerdict bell1_state(const Oml& l) {
  const Polyhedron poly(state_system(l));
  const std::size_t n = l.size();
  std::vector<Job> jobs;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      jobs.push_back({{a, b}, {}, objective(n, {{1, a}, {1, b}, {-1, l.meet(a, b)}}), Rat(1)});
  return run_jobs("bell1-state", "states", poly, std::move(jobs), false, state_assignment(l));
}

PropertyVerdict bell1_smap(const Oml& l) {
  const Polyhedron poly(smap_system(l));
  const std::size_t n = l.size();
  auto v = [n](Elem x, Elem y) { return x * n + y; };
  std::vector<Job> jobs;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      jobs.push_back(
          {{a, b}, {}, objective(n * n, {{1, v(a, a)}, {1, v(b, b)}, {-1, v(a, b)}}), Rat(1)});
  return run_jobs("bell1-smap", "s-maps", poly, std::move(jobs), false, map_assignment(l));
}

PropertyVerdict bell2_state(const Oml& l) {
  const Polyhedron poly(state_system(l));
  const std::size_t n = l.size();
  std::vector<Job> jobs;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      for (Elem c = b; c < n; ++c)
        jobs.push_back({{a, b, c},
                        {},
                        objective(n, {{1, a},
                                      {1, b},
                                      {1, c},
                                      {-1, l.meet(a, b)},
                                      {-1, l.meet(a, c)},
                                      {-1, l.meet(c, b)}}),
                        Rat(1)});
  return run_jobs("bell2-state", "states", poly, std::move(jobs), false, state_assignment(l));
}

namespace {

PropertyVerdict bell2_smap_over(const Oml& l, const Polyhedron& poly, std::string scope) {
  const std::size_t n = l.size();
  auto v = [n](Elem x, Elem y) { return x * n + y; };
  std::vector<Job> jobs;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        jobs.push_back({{a, b, c},
                        {},
                        objective(n * n, {{1, v(a, a)},
                                          {1, v(b, b)},
                                          {1, v(c, c)},
                                          {-1, v(a, b)},
                                          {-1, v(a, c)},
                                          {-1, v(c, b)}}),
                        Rat(1)});
  return run_jobs("bell2-smap", std::move(scope), poly, std::move(jobs), false, map_assignment(l));
}

}  // namespace

PropertyVerdict bell2_smap(const Oml& l, bool require_pseudometric) {
  const Polyhedron all(smap_system(l));
  if (!require_pseudometric) return bell2_smap_over(l, all, "s-maps");
  const Polyhedron pm = all.restrict(pseudometric_eqs(l), pseudometric_ineqs(l));
  PropertyVerdict v = bell2_smap_over(l, pm, "s-maps with pseudometric d_p");
  v.related.push_back(bell2_smap_over(l, all, "s-maps"));
  return v;
}

PropertyVerdict jauch_piron_state(const Oml& l) {
  const Polyhedron poly(state_system(l));
  const std::size_t n = l.size();
  std::vector<Job> jobs;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      jobs.push_back({{a, b},
                      {fix(n, a, Rat(1)), fix(n, b, Rat(1))},
                      objective(n, {{-1, l.meet(a, b)}}),
                      Rat(-1)});
  return run_jobs("jauch-piron-state", "states", poly, std::move(jobs), true, state_assignment(l));
}

PropertyVerdict jauch_piron_smap(const Oml& l) {
  const Polyhedron poly(smap_system(l));
  const std::size_t n = l.size();
  const std::size_t nn = n * n;
  auto v = [n](Elem x, Elem y) { return x * n + y; };

  std::vector<Job> jobs;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      jobs.push_back({{a, b},
                      {fix(nn, v(a, a), Rat(1)), fix(nn, v(b, b), Rat(1))},
                      objective(nn, {{-1, v(a, b)}}),
                      Rat(-1)});
  PropertyVerdict main =
      run_jobs("jauch-piron-smap", "s-maps", poly, std::move(jobs), true, map_assignment(l));

  std::vector<Job> addendum;
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c)
      for (std::size_t other : {v(a, c), v(c, a)})
        for (long sign : {1L, -1L})
          addendum.push_back({{a, c},
                              {fix(nn, v(a, a), Rat(1))},
                              objective(nn, {{sign, other}, {-sign, v(c, c)}}),
                              Rat(0)});
  PropertyVerdict extra = run_jobs("jauch-piron-smap-addendum", "s-maps", poly,
                                   std::move(addendum), false, map_assignment(l));
  if (extra.verdict == Verdict::Violated && main.verdict == Verdict::Implied)
    main.verdict = Verdict::Violated;
  main.related.push_back(std::move(extra));
  return main;
}

namespace {

/// d_p(x, y) = p(x, y') + p(x', y) as (variable, +1) terms.
std::array<std::size_t, 2> dp_vars(const Oml& l, Elem x, Elem y) {
  const std::size_t n = l.size();
  return {x * n + l.ocomp(y), l.ocomp(x) * n + y};
}

}  // namespace

std::vector<LinConstraint> pseudometric_eqs(const Oml& l) {
  const std::size_t n = l.size();
  std::vector<LinConstraint> out;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      LinConstraint e{RatVec(n * n), Rat(0)};
      for (auto var : dp_vars(l, x, y)) e.coeffs[var] += Rat(1);
      for (auto var : dp_vars(l, y, x)) e.coeffs[var] -= Rat(1);
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<LinConstraint> pseudometric_ineqs(const Oml& l) {
  const std::size_t n = l.size();
  std::vector<LinConstraint> out;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (x == y || z == x || z == y) continue;
        LinConstraint e{RatVec(n * n), Rat(0)};
        for (auto var : dp_vars(l, x, y)) e.coeffs[var] += Rat(1);
        for (auto var : dp_vars(l, x, z)) e.coeffs[var] -= Rat(1);
        for (auto var : dp_vars(l, z, y)) e.coeffs[var] -= Rat(1);
        out.push_back(std::move(e));
      }
  return out;
}

PseudometricReport is_pseudometric(const BiMap& d) {
  const std::size_t n = d.lattice().size();
  for (Elem a = 0; a < n; ++a)
    if (!d(a, a).is_zero()) return {false, "reflexive", {a}, d(a, a), Rat(0)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (d(a, b) != d(b, a)) return {false, "symmetry", {a, b}, d(a, b), d(b, a)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (d(a, b) > d(a, c) + d(c, b))
          return {false, "triangle", {a, b, c}, d(a, b), d(a, c) + d(c, b)};
  return {};
}

SweepReport search_pseudometric_violation(std::span<const Oml> lattices, std::size_t cap) {
  SweepReport rep;
  for (std::size_t li = 0; li < lattices.size(); ++li) {
    auto l = std::make_shared<const Oml>(lattices[li]);
    const VertexList vl = enumerate_vertices(smap_system(*l), cap);
    LatticeSweep ls;
    ls.elements = l->size();
    ls.vertices = vl.vertices.size();
    ls.cap_exceeded = vl.cap_exceeded;
    for (std::size_t vi = 0; vi < vl.vertices.size(); ++vi) {
      ++ls.examined;
      BiMap p = bimap_from_vector(l, vl.vertices[vi]);
      BiMap d = derive_d_from_s(p);
      PseudometricReport pm = is_pseudometric(d);
      if (!pm.ok) {
        rep.found = true;
        rep.lattice_index = li;
        rep.vertex_index = vi;
        rep.smap = std::move(p);
        rep.dmap = std::move(d);
        rep.violation = std::move(pm);
        rep.lattices.push_back(ls);
        return rep;
      }
    }
    rep.lattices.push_back(ls);
  }
  return rep;
}

std::vector<std::pair<std::string, Oml>> builtin_suite() {
  std::vector<std::pair<std::string, Oml>> out;
  out.emplace_back("2^{1,2}", boolean_algebra(2));
  out.emplace_back("2^{1,2,3}", boolean_algebra(3));
  out.emplace_back("MO(2)", mo(2));
  out.emplace_back("MO(3)", mo(3));
  const std::vector<Oml> parts = {boolean_algebra(2), boolean_algebra(2), boolean_algebra(3)};
  out.emplace_back("2^{1,2} + 2^{1,2} + 2^{1,2,3}", horizontal_sum(parts));
  return out;
}

}  // namespace omlprob
