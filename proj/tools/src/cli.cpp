#include "omlprob_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "omlprob/analysis.hpp"
#include "omlprob/bimap.hpp"
#include "omlprob/bimap_io.hpp"
#include "omlprob/lattice.hpp"
#include "omlprob/lattice_io.hpp"
#include "omlprob/report.hpp"
#include "omlprob/states.hpp"

namespace omlprob::cli {

namespace {

namespace fs = std::filesystem;

/// Bad command-line values detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapInput {
  std::shared_ptr<const Oml> lattice;
  std::optional<BiMap> map;
  /// Lattice reference to write into derived map files.
  std::string lattice_ref;
};

/// `files` is [map] or [lattice, map].
MapInput load_map_input(const std::vector<std::string>& files) {
  MapInput in;
  const fs::path map_path = files.back();
  if (files.size() == 2) {
    in.lattice = std::make_shared<const Oml>(load_lattice(files.front()));
    in.lattice_ref = files.front();
  } else {
    const Json j = parse_json(read_file(map_path));
    const auto ref = map_lattice_ref(j);
    if (!ref) throw FormatError("map file names no lattice; pass the lattice file first");
    fs::path lp(*ref);
    if (lp.is_relative()) lp = map_path.parent_path() / lp;
    in.lattice = std::make_shared<const Oml>(load_lattice(lp));
    in.lattice_ref = lp.string();
  }
  in.map = load_bimap(map_path, in.lattice).map;
  return in;
}

std::string join_names(const Oml& l, const std::vector<Elem>& elems) {
  std::string s;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ", ";
    s += l.name(elems[i]);
  }
  return s;
}

std::string corners_text(const FamilyTag& t) {
  std::string s;
  for (const auto& c : t.corners) s += (s.empty() ? "" : " ") + c.str();
  return s;
}

void print_axiom_report(std::ostream& out, const Oml& l, const AxiomReport& r) {
  out << "system: " << to_string(r.system) << '\n';
  if (r.ok) {
    out << "result: ok\n";
    return;
  }
  const auto& v = *r.first_violation;
  out << "result: violated " << v.axiom << " at (" << join_names(l, v.elements) << "): "
      << v.lhs << " != " << v.rhs << '\n';
}

void print_identity_report(std::ostream& out, const Oml& l, const IdentityReport& r) {
  if (r.ok) {
    out << "result: ok (" << r.checked << " identities checked)\n";
    return;
  }
  const auto& f = *r.failure;
  out << "result: failed " << f.identity << " at (" << join_names(l, f.elements) << "): " << f.lhs
      << " != " << f.rhs << '\n';
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// Writes `j` to `path`, or to `out` when `path` is empty.
void write_json(std::ostream& out, const Json& j, const std::string& path) {
  if (path.empty()) {
    emit(out, j);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

/// Lattice reference as seen from the directory of `output`.
std::string relative_ref(const std::string& lattice, const std::string& output) {
  if (output.empty()) return lattice;
  const fs::path base = fs::absolute(output).parent_path();
  return fs::proximate(fs::absolute(lattice), base).generic_string();
}

std::vector<Rat> parse_params(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rat::parse(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad parameter '" + item + "': " + e.what());
    }
  }
  return out;
}

int cmd_check_lattice(const std::string& path, bool json, std::ostream& out) {
  const RawLattice raw = parse_lattice(read_file(path));
  auto result = validate_oml(raw);
  if (auto* v = std::get_if<LatticeViolation>(&result)) {
    if (json) {
      Json j = to_json(*v);
      j["file"] = path;
      emit(out, j);
    } else {
      out << "lattice: " << path << '\n' << "result: invalid, " << to_string(v->fault);
      if (v->axiom) out << " (axiom " << v->axiom << ")";
      if (!v->witnesses.empty()) {
        out << " at (";
        for (std::size_t i = 0; i < v->witnesses.size(); ++i)
          out << (i ? ", " : "") << v->witnesses[i];
        out << ")";
      }
      out << ": " << v->message << '\n';
    }
    return kViolation;
  }
  const Oml& l = std::get<Oml>(result);
  const auto bl = blocks(l);
  if (json) {
    Json j = Json::object();
    j["file"] = path;
    j["valid"] = true;
    j["elements"] = l.size();
    Json bs = Json::array();
    for (const auto& b : bl) bs.push_back(elements_json(l, b));
    j["blocks"] = std::move(bs);
    emit(out, j);
  } else {
    out << "lattice: " << path << '\n'
        << "result: valid orthomodular lattice, " << l.size() << " elements, " << bl.size()
        << (bl.size() == 1 ? " block" : " blocks") << '\n';
    for (const auto& b : bl) out << "  block: {" << join_names(l, b) << "}\n";
  }
  return kOk;
}

MapSystem parse_system(const std::string& s) {
  if (s == "s") return MapSystem::S;
  if (s == "j") return MapSystem::J;
  if (s == "d") return MapSystem::D;
  return MapSystem::G;
}

int cmd_check_map(const std::string& system, const std::vector<std::string>& files, bool json,
                  std::ostream& out) {
  const MapInput in = load_map_input(files);
  const Oml& l = *in.lattice;
  const AxiomReport r = check_map(*in.map, parse_system(system));
  std::optional<FamilyTag> fam;
  if (r.system == MapSystem::G && r.ok) fam = classify_family(*in.map);
  if (json) {
    Json j = Json::object();
    j["map"] = files.back();
    j["report"] = to_json(l, r);
    if (fam) j["family"] = to_json(*fam);
    emit(out, j);
  } else {
    out << "map: " << files.back() << '\n';
    print_axiom_report(out, l, r);
    if (fam) out << "family: " << gamma_label(*fam) << " (corners " << corners_text(*fam) << ")\n";
  }
  return r.ok ? kOk : kViolation;
}

int cmd_classify_map(const std::vector<std::string>& files, bool json, std::ostream& out) {
  const MapInput in = load_map_input(files);
  const Oml& l = *in.lattice;
  const BiMap& g = *in.map;
  const AxiomReport r = check_g_map(g);
  Json j = Json::object();
  j["map"] = files.back();
  j["report"] = to_json(l, r);
  if (!json) {
    out << "map: " << files.back() << '\n';
    print_axiom_report(out, l, r);
  }
  if (!r.ok) {
    if (json) emit(out, j);
    return kViolation;
  }
  bool ok = true;
  const FamilyTag fam = classify_family(g);
  j["family"] = to_json(fam);
  if (!json) out << "family: " << gamma_label(fam) << " (corners " << corners_text(fam) << ")\n";

  try {
    const SemanticReport sem = semantic_check_on_compatible(g);
    ok = ok && sem.pairs.ok && !sem.induced_state_problem;
    j["semantics"] = to_json(l, sem);
    if (!json) {
      out << "connective: " << sem.connective << '\n';
      if (sem.induced_state_problem)
        out << "induced state: not a state (" << sem.induced_state_problem->message << ")\n";
      out << "compatible pairs: ";
      print_identity_report(out, l, sem.pairs);
    }
  } catch (const UnsupportedFamily& e) {
    j["semantics"] = {{"unsupported", e.what()}};
    if (!json) out << "connective: unsupported (" << e.what() << ")\n";
  }
  const IdentityReport komp = verify_lemma_komp(g);
  ok = ok && komp.ok;
  j["compatible_decomposition"] = to_json(l, komp);
  if (!json) {
    out << "compatible decomposition: ";
    print_identity_report(out, l, komp);
  }
  if (fam.gamma == 9) {
    const PurityResult pure = is_pure_projection(g);
    const IdentityReport ids = verify_gamma9_identities(g);
    ok = ok && ids.ok;
    j["purity"] = to_json(l, pure);
    j["gamma9_identities"] = to_json(l, ids);
    if (!json) {
      out << "pure projection: " << (pure.pure ? "yes" : "no");
      if (pure.witness)
        out << ", G(" << l.name(pure.witness->first) << "," << l.name(pure.witness->second)
            << ") != G(" << l.name(pure.witness->first) << "," << l.name(l.bot()) << ")";
      out << '\n' << "Γ9 identities: ";
      print_identity_report(out, l, ids);
    }
  }
  j["ok"] = ok;
  if (json) emit(out, j);
  return ok ? kOk : kViolation;
}

int cmd_states(const std::string& path, std::optional<std::size_t> vertices, bool json,
               std::ostream& out) {
  const Oml l = load_lattice(path);
  const StateClass c = classify_states(l, vertices);
  if (json) {
    Json j = to_json(l, c);
    j["file"] = path;
    emit(out, j);
    return kOk;
  }
  out << "lattice: " << path << '\n'
      << "classification: " << to_string(c.tag) << '\n'
      << "dimension: " << c.polytope.dim << '\n';
  if (c.polytope.witness) {
    out << "witness:";
    for (Elem x = 0; x < l.size(); ++x) out << ' ' << l.name(x) << '=' << (*c.polytope.witness)[x];
    out << '\n';
  }
  if (c.polytope.vertices) {
    out << "vertices: " << c.polytope.vertices->size() << '\n';
    for (const auto& v : *c.polytope.vertices) {
      out << " ";
      for (Elem x = 0; x < l.size(); ++x) out << ' ' << l.name(x) << '=' << v[x];
      out << '\n';
    }
  }
  return kOk;
}

struct ConstructOpts {
  std::string family;
  std::string lattice;
  std::string params;
  std::size_t n = 2;
  std::string output;
};

int cmd_construct(const ConstructOpts& o, std::ostream& out) {
  if (o.family == "boolean") {
    write_json(out, lattice_to_json(boolean_algebra(o.n)), o.output);
    return kOk;
  }
  if (o.family == "mo") {
    if (o.n < 2) throw UsageError("--n must be at least 2 for mo");
    write_json(out, lattice_to_json(mo(o.n)), o.output);
    return kOk;
  }
  if (o.lattice.empty()) throw UsageError("--family gamma9 needs --lattice");
  const auto p = parse_params(o.params);
  if (p.size() != 4) throw UsageError("--params needs four values r1,r2,u1,u2");
  auto l = std::make_shared<const Oml>(load_lattice(o.lattice));
  const BiMap g = build_table3_family(l, p[0], p[1], p[2], p[3]);
  write_json(out, bimap_to_json(g, relative_ref(o.lattice, o.output)), o.output);
  return kOk;
}

int cmd_derive(const std::string& kind, const std::vector<std::string>& files,
               const std::string& output, bool json, std::ostream& out) {
  const MapInput in = load_map_input(files);
  const Oml& l = *in.lattice;
  const BiMap& m = *in.map;
  const AxiomReport pre = kind == "complement" ? check_g_map(m) : check_s_map(m);
  if (!pre.ok) {
    if (json) {
      emit(out, Json{{"map", files.back()}, {"precondition", to_json(l, pre)}});
    } else {
      out << "map: " << files.back() << '\n' << "precondition failed\n";
      print_axiom_report(out, l, pre);
    }
    return kViolation;
  }
  BiMap derived = kind == "j"      ? derive_j_from_s(m)
                  : kind == "d"    ? derive_d_from_s(m)
                  : kind == "pure" ? derive_pure_projection_from_s(m)
                                   : complement_map(m);
  const std::string ref = relative_ref(in.lattice_ref, output);
  const Json j = bimap_to_json(derived, ref);
  write_json(out, j, output);
  if (!output.empty()) {
    if (json) emit(out, Json{{"written", output}});
    else out << "written: " << output << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& check, const std::vector<std::string>& files,
               const std::optional<std::string>& column, bool json, std::ostream& out) {
  const MapInput in = load_map_input(files);
  const Oml& l = *in.lattice;
  const BiMap& m = *in.map;
  Json j = Json::object();
  j["map"] = files.back();
  j["check"] = check;

  auto fail_pre = [&](const std::string& why, const Json& detail) {
    j["precondition"] = why;
    if (!detail.is_null()) j["report"] = detail;
    if (json) emit(out, j);
    else out << "map: " << files.back() << '\n' << "precondition failed: " << why << '\n';
    return kViolation;
  };

  if (check == "induced-state") {
    StateFn s;
    if (column) {
      const AxiomReport r = check_g_map(m);
      if (!r.ok) return fail_pre("not a G-map", to_json(l, r));
      if (classify_family(m).gamma != 9) return fail_pre("not in Γ9", Json());
      s = induced_state_from_gamma9(m, l.at(*column));
    } else {
      const AxiomReport r = check_s_map(m);
      if (!r.ok) return fail_pre("not an s-map", to_json(l, r));
      s = induced_state_from_smap(m);
    }
    const auto v = validate_state(l, s);
    j["state"] = state_to_json(l, s);
    j["ok"] = !v;
    if (v) j["violation"] = to_json(l, *v);
    if (json) {
      emit(out, j);
    } else {
      out << "map: " << files.back() << '\n' << "state:";
      for (Elem x = 0; x < l.size(); ++x) out << ' ' << l.name(x) << '=' << s(x);
      out << '\n' << "result: " << (v ? "not a state (" + v->message + ")" : "ok") << '\n';
    }
    return v ? kViolation : kOk;
  }

  const AxiomReport r = check_g_map(m);
  if (!r.ok) return fail_pre("not a G-map", to_json(l, r));
  const FamilyTag fam = classify_family(m);

  if (check == "complement") {
    const BiMap c = complement_map(m);
    const AxiomReport rc = check_g_map(c);
    const FamilyTag fc = classify_family(c);
    bool flipped = true;
    for (std::size_t i = 0; i < 4; ++i) flipped = flipped && fc.corners[i] == Rat(1) - fam.corners[i];
    j["report"] = to_json(l, rc);
    j["family"] = to_json(fam);
    j["complement_family"] = to_json(fc);
    j["corners_flipped"] = flipped;
    j["ok"] = rc.ok && flipped;
    if (json) {
      emit(out, j);
    } else {
      out << "map: " << files.back() << '\n'
          << "family: " << gamma_label(fam) << ", complement family: " << gamma_label(fc) << '\n';
      print_axiom_report(out, l, rc);
    }
    return rc.ok && flipped ? kOk : kViolation;
  }

  IdentityReport ids;
  if (check == "compatible-decomposition") {
    ids = verify_lemma_komp(m);
  } else if (check == "gamma9-identities" || check == "purity") {
    if (fam.gamma != 9) return fail_pre("not in Γ9", Json());
    if (check == "purity") {
      const PurityResult p = is_pure_projection(m);
      j["purity"] = to_json(l, p);
      j["ok"] = p.pure;
      if (json) {
        emit(out, j);
      } else {
        out << "map: " << files.back() << '\n' << "pure projection: " << (p.pure ? "yes" : "no");
        if (p.witness)
          out << ", witness (" << l.name(p.witness->first) << ", " << l.name(p.witness->second)
              << ")";
        out << '\n';
      }
      return p.pure ? kOk : kViolation;
    }
    ids = verify_gamma9_identities(m);
  } else {
    try {
      const SemanticReport sem = semantic_check_on_compatible(m);
      j["semantics"] = to_json(l, sem);
      const bool ok = sem.pairs.ok && !sem.induced_state_problem;
      j["ok"] = ok;
      if (json) {
        emit(out, j);
      } else {
        out << "map: " << files.back() << '\n'
            << "family: " << gamma_label(fam) << ", connective " << sem.connective << '\n';
        print_identity_report(out, l, sem.pairs);
      }
      return ok ? kOk : kViolation;
    } catch (const UnsupportedFamily& e) {
      return fail_pre(std::string("unsupported family: ") + e.what(), Json());
    }
  }
  j["report"] = to_json(l, ids);
  j["ok"] = ids.ok;
  if (json) {
    emit(out, j);
  } else {
    out << "map: " << files.back() << '\n';
    print_identity_report(out, l, ids);
  }
  return ids.ok ? kOk : kViolation;
}

void print_verdict(std::ostream& out, const Oml& l, const PropertyVerdict& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::size_t vacuous = 0;
  for (const auto& i : v.instances) vacuous += i.vacuous ? 1 : 0;
  out << pad << v.property << " over " << v.scope << ": " << to_string(v.verdict) << " ("
      << v.instances.size() << " instances, " << vacuous << " vacuous, certificates "
      << (certificates_valid(v) ? "verified" : "NOT verified") << ")\n";
  if (v.witness) {
    out << pad << "  witness (" << join_names(l, v.witness->elements)
        << "), value " << v.witness->value << '\n'
        << pad << "  assignment:";
    for (const auto& [k, x] : v.witness->assignment)
      if (!x.is_zero()) out << ' ' << k << '=' << x;
    out << " (others 0)\n";
  }
  for (const auto& r : v.related) print_verdict(out, l, r, indent + 2);
}

int cmd_property(const std::string& name, const std::string& path, bool pseudometric,
                 bool certificates, bool json, std::ostream& out) {
  const Oml l = load_lattice(path);
  PropertyVerdict v;
  if (name == "bell1-state") v = bell1_state(l);
  else if (name == "bell1-smap") v = bell1_smap(l);
  else if (name == "bell2-state") v = bell2_state(l);
  else if (name == "bell2-smap") v = bell2_smap(l, pseudometric);
  else if (name == "jauch-piron-state") v = jauch_piron_state(l);
  else v = jauch_piron_smap(l);
  if (json) {
    Json j = to_json(l, v, certificates);
    j["lattice"] = path;
    emit(out, j);
  } else {
    out << "lattice: " << path << '\n';
    print_verdict(out, l, v, 0);
  }
  return v.verdict == Verdict::Implied ? kOk : kViolation;
}

int cmd_search(const std::vector<std::string>& files, std::size_t cap, bool json,
               std::ostream& out) {
  std::vector<std::string> names;
  std::vector<Oml> lattices;
  if (files.empty()) {
    names = {"2^{1,2}", "MO(2)", "MO(3)"};
    lattices = {boolean_algebra(2), mo(2), mo(3)};
  } else {
    for (const auto& f : files) {
      names.push_back(f);
      lattices.push_back(load_lattice(f));
    }
  }
  const SweepReport r = search_pseudometric_violation(lattices, cap);
  if (json) {
    emit(out, to_json(names, lattices, r));
  } else {
    for (std::size_t i = 0; i < r.lattices.size(); ++i) {
      const auto& s = r.lattices[i];
      out << names[i] << ": " << s.examined << " of " << s.vertices << " s-map vertices examined"
          << (s.cap_exceeded ? " (cap reached)" : "") << '\n';
    }
    if (r.found) {
      const Oml& l = lattices[r.lattice_index];
      out << "outcome: violation on " << names[r.lattice_index] << ", vertex " << r.vertex_index
          << ", " << r.violation.axiom << " fails at (" << join_names(l, r.violation.elements)
          << "): " << r.violation.lhs << " vs " << r.violation.rhs << '\n';
    } else {
      out << "outcome: exhausted, no violation\n";
    }
  }
  return r.found ? kViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for finite orthomodular lattices, states and s/j/d/G-maps", "omlprob"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string path;
  std::vector<std::string> files;
  std::string system;
  std::optional<std::size_t> vertices;
  ConstructOpts copt;
  std::string kind;
  std::string output;
  std::string check;
  std::optional<std::string> column;
  std::string property;
  bool pseudometric = false;
  bool certificates = false;
  std::size_t cap = 10000;

  auto* c_lat = app.add_subcommand("check-lattice", "Validate a lattice file");
  c_lat->add_option("lattice", path, "Lattice file")->required();

  const auto map_files = [&](CLI::App* sub) {
    sub->add_option("files", files, "[lattice] map")->required()->expected(1, 2);
  };

  auto* c_map = app.add_subcommand("check-map", "Check a map against an axiom system");
  c_map->add_option("--system", system, "s, j, d or g")
      ->required()
      ->check(CLI::IsMember({"s", "j", "d", "g"}));
  map_files(c_map);

  auto* c_cls = app.add_subcommand("classify-map", "Family, semantics and identities of a G-map");
  map_files(c_cls);

  auto* c_st = app.add_subcommand("states", "Classify the state space of a lattice");
  c_st->add_option("lattice", path, "Lattice file")->required();
  c_st->add_option("--vertices", vertices, "List up to N vertices of the state polytope");

  auto* c_con = app.add_subcommand("construct", "Build a lattice or a Γ9 map");
  c_con->add_option("--family", copt.family, "gamma9, boolean or mo")
      ->required()
      ->check(CLI::IsMember({"gamma9", "boolean", "mo"}));
  c_con->add_option("--lattice", copt.lattice, "Six-element lattice for gamma9");
  c_con->add_option("--params", copt.params, "r1,r2,u1,u2 for gamma9");
  c_con->add_option("--n", copt.n, "Atoms (boolean) or blocks (mo)");
  c_con->add_option("--output", copt.output, "Write to file instead of standard output");

  auto* c_der = app.add_subcommand("derive", "Derive a map from an s-map or G-map");
  c_der->add_option("--kind", kind, "j, d, pure or complement")
      ->required()
      ->check(CLI::IsMember({"j", "d", "pure", "complement"}));
  c_der->add_option("--output", output, "Write to file instead of standard output");
  map_files(c_der);

  auto* c_ver = app.add_subcommand("verify", "Check an identity on a map");
  c_ver->add_option("check", check,
                    "compatible-decomposition, gamma9-identities, purity, semantics, complement "
                    "or induced-state")
      ->required()
      ->check(CLI::IsMember({"compatible-decomposition", "gamma9-identities", "purity",
                             "semantics", "complement", "induced-state"}));
  c_ver->add_option("--column", column, "Column element for the Γ9 induced state");
  map_files(c_ver);

  auto* c_prop = app.add_subcommand("property", "Certify or refute a property on a lattice");
  c_prop->add_option("name", property, "Property name")
      ->required()
      ->check(CLI::IsMember({"bell1-state", "bell1-smap", "bell2-state", "bell2-smap",
                             "jauch-piron-state", "jauch-piron-smap"}));
  c_prop->add_option("lattice", path, "Lattice file")->required();
  c_prop->add_flag("--pseudometric", pseudometric,
                   "bell2-smap: restrict to s-maps whose d_p is a pseudometric");
  c_prop->add_flag("--certificates", certificates, "Include every dual certificate (JSON)");

  auto* c_search = app.add_subcommand("search", "Look for an s-map whose d_p is not a pseudometric");
  c_search->add_option("lattices", files, "Lattice files (default: 2^{1,2}, MO(2), MO(3))");
  c_search->add_option("--cap", cap, "Vertex cap per lattice");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (c_lat->parsed()) return cmd_check_lattice(path, json, out);
    if (c_map->parsed()) return cmd_check_map(system, files, json, out);
    if (c_cls->parsed()) return cmd_classify_map(files, json, out);
    if (c_st->parsed()) return cmd_states(path, vertices, json, out);
    if (c_con->parsed()) return cmd_construct(copt, out);
    if (c_der->parsed()) return cmd_derive(kind, files, output, json, out);
    if (c_ver->parsed()) return cmd_verify(check, files, column, json, out);
    if (c_prop->parsed())
      return cmd_property(property, path, pseudometric, certificates, json, out);
    if (c_search->parsed()) return cmd_search(files, cap, json, out);
  } catch (const LatticeError& e) {
    const auto& v = e.violation();
    err << "invalid lattice: " << to_string(v.fault) << ": " << v.message << '\n';
    return kViolation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace omlprob::cli
