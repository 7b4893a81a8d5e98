#include "omlprob/report.hpp"

#include "omlprob/bimap_io.hpp"

namespace omlprob {

Json rat_json(const Rat& r) { return r.str(); }

Json elements_json(const Oml& l, std::span<const Elem> elems) {
  Json out = Json::array();
  for (Elem e : elems) out.push_back(l.name(e));
  return out;
}

namespace {

Json rats_json(std::span<const Rat> v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Json assignment_json(const LinSystem& sys, const RatVec& x) {
  Json out = Json::object();
  for (std::size_t i = 0; i < x.size(); ++i) out[sys.vars[i]] = x[i].str();
  return out;
}

}  // namespace

Json to_json(const LatticeViolation& v) {
  Json j = Json::object();
  j["valid"] = false;
  j["fault"] = to_string(v.fault);
  if (v.axiom != 0) j["axiom"] = v.axiom;
  j["witnesses"] = v.witnesses;
  j["message"] = v.message;
  return j;
}

Json to_json(const Oml& l, const PairClass& c) {
  Json j = Json::object();
  j["relation"] = to_string(c.tag);
  if (c.meet_with) j["meet"] = l.name(*c.meet_with);
  if (c.meet_with_complement) j["meet_with_complement"] = l.name(*c.meet_with_complement);
  return j;
}

Json to_json(const LinSystem& sys, const PolyInfo& info) {
  Json j = Json::object();
  j["status"] = to_string(info.status);
  j["dim"] = info.dim;
  if (info.witness) j["witness"] = assignment_json(sys, *info.witness);
  if (info.vertices) {
    Json vs = Json::array();
    for (const auto& v : *info.vertices) vs.push_back(assignment_json(sys, v));
    j["vertices"] = std::move(vs);
  }
  return j;
}

Json to_json(const Oml& l, const StateClass& c) {
  Json j = Json::object();
  j["classification"] = to_string(c.tag);
  j["elements"] = l.size();
  Json poly = Json::object();
  poly["status"] = to_string(c.polytope.status);
  poly["dim"] = c.polytope.dim;
  if (c.polytope.witness) poly["witness"] = state_to_json(l, state_from_vector(*c.polytope.witness));
  if (c.polytope.vertices) {
    Json vs = Json::array();
    for (const auto& v : *c.polytope.vertices) vs.push_back(state_to_json(l, state_from_vector(v)));
    poly["vertices"] = std::move(vs);
  }
  j["polytope"] = std::move(poly);
  return j;
}

Json to_json(const Oml& l, const StateViolation& v) {
  Json j = Json::object();
  j["fault"] = to_string(v.fault);
  j["elements"] = elements_json(l, v.elements);
  j["message"] = v.message;
  return j;
}

Json to_json(const Oml& l, const AxiomReport& r) {
  Json j = Json::object();
  j["system"] = to_string(r.system);
  j["ok"] = r.ok;
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    j["violation"] = {{"axiom", v.axiom},
                      {"elements", elements_json(l, v.elements)},
                      {"lhs", v.lhs.str()},
                      {"rhs", v.rhs.str()}};
  }
  return j;
}

std::string gamma_label(const FamilyTag& t) {
  return t.gamma ? "Γ" + std::to_string(*t.gamma) : "invalid-corners";
}

Json to_json(const FamilyTag& t) {
  Json j = Json::object();
  j["corners"] = rats_json(t.corners);
  j["gamma"] = t.gamma ? Json(*t.gamma) : Json(nullptr);
  j["family"] = gamma_label(t);
  return j;
}

Json to_json(const Oml& l, const IdentityReport& r) {
  Json j = Json::object();
  j["ok"] = r.ok;
  j["checked"] = r.checked;
  if (r.failure) {
    const auto& f = *r.failure;
    j["failure"] = {{"identity", f.identity},
                    {"elements", elements_json(l, f.elements)},
                    {"lhs", f.lhs.str()},
                    {"rhs", f.rhs.str()}};
  }
  return j;
}

Json to_json(const Oml& l, const SemanticReport& r) {
  Json j = Json::object();
  j["family"] = "Γ" + std::to_string(r.gamma);
  j["connective"] = r.connective;
  if (r.induced) j["induced_state"] = state_to_json(l, *r.induced);
  if (r.induced_state_problem) j["induced_state_problem"] = to_json(l, *r.induced_state_problem);
  j["compatible_pairs"] = to_json(l, r.pairs);
  j["ok"] = r.pairs.ok && !r.induced_state_problem;
  return j;
}

Json to_json(const Oml& l, const PurityResult& r) {
  Json j = Json::object();
  j["pure"] = r.pure;
  if (r.witness) j["witness"] = {l.name(r.witness->first), l.name(r.witness->second)};
  return j;
}

Json to_json(const Oml& l, const PseudometricReport& r) {
  Json j = Json::object();
  j["pseudometric"] = r.ok;
  if (!r.ok) {
    j["axiom"] = r.axiom;
    j["elements"] = elements_json(l, r.elements);
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
  }
  return j;
}

Json to_json(const Oml& l, const PropertyVerdict& v, bool with_certificates) {
  Json j = Json::object();
  j["property"] = v.property;
  j["scope"] = v.scope;
  j["verdict"] = to_string(v.verdict);
  std::size_t vacuous = 0;
  std::optional<Rat> worst;
  for (const auto& inst : v.instances) {
    if (inst.vacuous) {
      ++vacuous;
      continue;
    }
    const Rat excess = inst.max - inst.threshold;
    if (!worst || excess > *worst) worst = excess;
  }
  j["instances"] = v.instances.size();
  j["vacuous"] = vacuous;
  if (worst) j["max_excess"] = worst->str();
  if (v.witness) {
    Json w = Json::object();
    w["elements"] = elements_json(l, v.witness->elements);
    w["value"] = v.witness->value.str();
    Json a = Json::object();
    for (const auto& [k, x] : v.witness->assignment) a[k] = x.str();
    w["assignment"] = std::move(a);
    j["witness"] = std::move(w);
  }
  j["certificates_verified"] = certificates_valid(v);
  if (with_certificates) {
    Json insts = Json::array();
    for (const auto& inst : v.instances) {
      Json e = Json::object();
      e["elements"] = elements_json(l, inst.elements);
      e["vacuous"] = inst.vacuous;
      if (!inst.vacuous) {
        e["max"] = inst.max.str();
        e["threshold"] = inst.threshold.str();
        if (inst.certificate) {
          e["ineq_multipliers"] = rats_json(inst.certificate->ineq_multipliers);
          e["eq_multipliers"] = rats_json(inst.certificate->eq_multipliers);
          e["bound"] = inst.certificate->bound.str();
        }
      }
      insts.push_back(std::move(e));
    }
    j["certified_instances"] = std::move(insts);
  }
  if (!v.related.empty()) {
    Json rel = Json::array();
    for (const auto& r : v.related) rel.push_back(to_json(l, r, with_certificates));
    j["related"] = std::move(rel);
  }
  return j;
}

Json to_json(std::span<const std::string> names, std::span<const Oml> lattices,
             const SweepReport& r) {
  Json j = Json::object();
  Json per = Json::array();
  for (std::size_t i = 0; i < r.lattices.size(); ++i) {
    const auto& s = r.lattices[i];
    per.push_back({{"lattice", i < names.size() ? names[i] : std::to_string(i)},
                   {"elements", s.elements},
                   {"vertices", s.vertices},
                   {"examined", s.examined},
                   {"cap_exceeded", s.cap_exceeded}});
  }
  j["lattices"] = std::move(per);
  j["outcome"] = r.found ? "violation" : "exhausted";
  if (r.found) {
    const Oml& l = lattices[r.lattice_index];
    Json w = Json::object();
    w["lattice"] = r.lattice_index < names.size() ? names[r.lattice_index]
                                                  : std::to_string(r.lattice_index);
    w["vertex_index"] = r.vertex_index;
    w["violation"] = to_json(l, r.violation);
    w["smap"] = bimap_to_json(*r.smap, "")["values"];
    w["dmap"] = bimap_to_json(*r.dmap, "")["values"];
    j["witness"] = std::move(w);
  }
  return j;
}

}  // namespace omlprob
