#include "omlprob/bimap.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace omlprob {

BiMap::BiMap(std::shared_ptr<const Oml> lattice, std::vector<Rat> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (!lattice_) throw std::invalid_argument("BiMap: null lattice");
  if (values_.size() != lattice_->size() * lattice_->size())
    throw std::invalid_argument("BiMap: expected " +
                                std::to_string(lattice_->size() * lattice_->size()) +
                                " values, got " + std::to_string(values_.size()));
}

BiMap BiMap::constant(std::shared_ptr<const Oml> lattice, const Rat& value) {
  const std::size_t n = lattice->size();
  return BiMap(std::move(lattice), std::vector<Rat>(n * n, value));
}

BiMap BiMap::from_function(std::shared_ptr<const Oml> lattice,
                           const std::function<Rat(Elem, Elem)>& f) {
  const std::size_t n = lattice->size();
  std::vector<Rat> v;
  v.reserve(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) v.push_back(f(a, b));
  return BiMap(std::move(lattice), std::move(v));
}

const char* to_string(MapSystem s) {
  switch (s) {
    case MapSystem::S: return "s-map";
    case MapSystem::J: return "j-map";
    case MapSystem::D: return "d-map";
    case MapSystem::G: return "G-map";
  }
  return "?";
}

namespace {

class Checker {
 public:
  Checker(const BiMap& m, MapSystem sys) : m_(m), l_(m.lattice()) { report_.system = sys; }

  bool failed() const { return !report_.ok; }

  /// Records a violation unless lhs == rhs. Returns true when still clean.
  bool expect(const char* axiom, std::vector<Elem> elems, const Rat& lhs, const Rat& rhs) {
    if (!report_.ok) return false;
    if (lhs == rhs) return true;
    report_.ok = false;
    report_.first_violation = AxiomViolation{axiom, std::move(elems), lhs, rhs};
    return false;
  }

  bool range() {
    const std::size_t n = l_.size();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Rat& v = m_(a, b);
        if (v.sign() < 0) return expect("range", {a, b}, v, Rat(0));
        if (v > Rat(1)) return expect("range", {a, b}, v, Rat(1));
      }
    return true;
  }

  /// Visits every ordered orthogonal pair until `f` returns false.
  template <class F>
  void orthogonal_pairs(F&& f) {
    const std::size_t n = l_.size();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (l_.orthogonal(a, b) && !f(a, b)) return;
  }

  /// Third-axiom identities: row(a, b, c) and col(a, b, c) give (lhs, rhs).
  template <class Row, class Col>
  void additivity(const char* row_id, const char* col_id, Row&& row, Col&& col) {
    const std::size_t n = l_.size();
    orthogonal_pairs([&](Elem a, Elem b) {
      for (Elem c = 0; c < n; ++c) {
        auto [rl, rr] = row(a, b, c);
        if (!expect(row_id, {a, b, c}, rl, rr)) return false;
        auto [cl, cr] = col(a, b, c);
        if (!expect(col_id, {a, b, c}, cl, cr)) return false;
      }
      return true;
    });
  }

  AxiomReport take() { return std::move(report_); }

 private:
  const BiMap& m_;
  const Oml& l_;
  AxiomReport report_;
};

using Pair = std::pair<Rat, Rat>;

}  // namespace

AxiomReport check_s_map(const BiMap& p) {
  const Oml& l = p.lattice();
  const Elem o = l.top();
  Checker ck(p, MapSystem::S);
  if (!ck.range()) return ck.take();
  if (!ck.expect("s1", {o, o}, p(o, o), Rat(1))) return ck.take();
  ck.orthogonal_pairs([&](Elem a, Elem b) { return ck.expect("s2", {a, b}, p(a, b), Rat(0)); });
  if (ck.failed()) return ck.take();
  ck.additivity(
      "s3-row", "s3-column",
      [&](Elem a, Elem b, Elem c) { return Pair{p(l.join(a, b), c), p(a, c) + p(b, c)}; },
      [&](Elem a, Elem b, Elem c) { return Pair{p(c, l.join(a, b)), p(c, a) + p(c, b)}; });
  return ck.take();
}

AxiomReport check_j_map(const BiMap& q) {
  const Oml& l = q.lattice();
  const Elem z = l.bot(), o = l.top();
  Checker ck(q, MapSystem::J);
  if (!ck.range()) return ck.take();
  if (!ck.expect("j1", {z, z}, q(z, z), Rat(0))) return ck.take();
  if (!ck.expect("j1", {o, o}, q(o, o), Rat(1))) return ck.take();
  ck.orthogonal_pairs(
      [&](Elem a, Elem b) { return ck.expect("j2", {a, b}, q(a, b), q(a, a) + q(b, b)); });
  if (ck.failed()) return ck.take();
  ck.additivity(
      "j3-row", "j3-column",
      [&](Elem a, Elem b, Elem c) {
        return Pair{q(l.join(a, b), c), q(a, c) + q(b, c) - q(c, c)};
      },
      [&](Elem a, Elem b, Elem c) {
        return Pair{q(c, l.join(a, b)), q(c, a) + q(c, b) - q(c, c)};
      });
  return ck.take();
}

AxiomReport check_d_map(const BiMap& d) {
  const Oml& l = d.lattice();
  const Elem z = l.bot(), o = l.top();
  Checker ck(d, MapSystem::D);
  if (!ck.range()) return ck.take();
  for (Elem a = 0; a < l.size(); ++a)
    if (!ck.expect("d1", {a, a}, d(a, a), Rat(0))) return ck.take();
  if (!ck.expect("d1", {o, z}, d(o, z), Rat(1))) return ck.take();
  if (!ck.expect("d1", {z, o}, d(z, o), Rat(1))) return ck.take();
  ck.orthogonal_pairs([&](Elem a, Elem b) {
    return ck.expect("d2", {a, b}, d(a, b), d(a, z) + d(z, b));
  });
  if (ck.failed()) return ck.take();
  ck.additivity(
      "d3-row", "d3-column",
      [&](Elem a, Elem b, Elem c) {
        return Pair{d(l.join(a, b), c), d(a, c) + d(b, c) - d(z, c)};
      },
      [&](Elem a, Elem b, Elem c) {
        return Pair{d(c, l.join(a, b)), d(c, a) + d(c, b) - d(c, z)};
      });
  return ck.take();
}

AxiomReport check_g_map(const BiMap& g) {
  const Oml& l = g.lattice();
  const Elem z = l.bot(), o = l.top();
  Checker ck(g, MapSystem::G);
  if (!ck.range()) return ck.take();
  for (Elem x : {z, o})
    for (Elem y : {z, o}) {
      const Rat& v = g(x, y);
      if (v != Rat(0) && v != Rat(1)) {
        ck.expect("G1", {x, y}, v, v < Rat(1, 2) ? Rat(0) : Rat(1));
        return ck.take();
      }
    }
  ck.orthogonal_pairs([&](Elem a, Elem b) {
    return ck.expect("G2", {a, b}, g(a, b), g(a, z) + g(z, b) - g(z, z));
  });
  if (ck.failed()) return ck.take();
  ck.additivity(
      "G3-row", "G3-column",
      [&](Elem a, Elem b, Elem c) {
        return Pair{g(l.join(a, b), c), g(a, c) + g(b, c) - g(z, c)};
      },
      [&](Elem a, Elem b, Elem c) {
        return Pair{g(c, l.join(a, b)), g(c, a) + g(c, b) - g(c, z)};
      });
  return ck.take();
}

AxiomReport check_map(const BiMap& m, MapSystem system) {
  switch (system) {
    case MapSystem::S: return check_s_map(m);
    case MapSystem::J: return check_j_map(m);
    case MapSystem::D: return check_d_map(m);
    case MapSystem::G: return check_g_map(m);
  }
  throw std::invalid_argument("unknown map system");
}

namespace {

// Corner patterns (G00, G01, G10, G11) for Γ1..Γ16.
constexpr std::array<Corners, 16> kGamma = {{
    {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 1, 1, 0},
    {1, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {1, 1, 1, 1},
    {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0},
    {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 1, 0, 1},
}};

}  // namespace

int gamma_of(const Corners& c) {
  for (std::size_t i = 0; i < kGamma.size(); ++i)
    if (kGamma[i] == c) return static_cast<int>(i) + 1;
  throw std::invalid_argument("corner values must be 0 or 1");
}

Corners corners_of(int gamma) {
  if (gamma < 1 || gamma > 16) throw std::out_of_range("gamma index must be in 1..16");
  return kGamma[static_cast<std::size_t>(gamma - 1)];
}

FamilyTag classify_family(const BiMap& g) {
  const Oml& l = g.lattice();
  const Elem z = l.bot(), o = l.top();
  FamilyTag tag;
  tag.corners = {g(z, z), g(z, o), g(o, z), g(o, o)};
  Corners c{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (tag.corners[i] == Rat(0)) c[i] = 0;
    else if (tag.corners[i] == Rat(1)) c[i] = 1;
    else return tag;
  }
  tag.gamma = gamma_of(c);
  return tag;
}

BiMap complement_map(const BiMap& g) {
  std::vector<Rat> v;
  v.reserve(g.values().size());
  for (const Rat& x : g.values()) v.push_back(Rat(1) - x);
  return BiMap(g.lattice_ptr(), std::move(v));
}

BiMap derive_j_from_s(const BiMap& p) {
  return BiMap::from_function(p.lattice_ptr(),
                              [&](Elem a, Elem b) { return p(a, a) + p(b, b) - p(a, b); });
}

BiMap derive_d_from_s(const BiMap& p) {
  const Oml& l = p.lattice();
  return BiMap::from_function(p.lattice_ptr(), [&](Elem a, Elem b) {
    return p(a, l.ocomp(b)) + p(l.ocomp(a), b);
  });
}

BiMap derive_pure_projection_from_s(const BiMap& p) {
  const Oml& l = p.lattice();
  return BiMap::from_function(p.lattice_ptr(),
                              [&](Elem a, Elem b) { return p(a, b) + p(a, l.ocomp(b)); });
}

BiMap build_table3_family(std::shared_ptr<const Oml> mo2, const Rat& r1, const Rat& r2,
                          const Rat& u1, const Rat& u2) {
  for (const auto& [name, v] : {std::pair{"r1", &r1}, {"r2", &r2}, {"u1", &u1}, {"u2", &u2}})
    if (!in_unit_interval(*v))
      throw ParamOutOfRange(std::string(name) + " = " + v->str() + " is outside [0,1]");

  const Oml& l = *mo2;
  std::vector<std::string> names = l.names();
  std::sort(names.begin(), names.end());
  if (names != std::vector<std::string>{"0", "1", "a", "a'", "b", "b'"})
    throw std::invalid_argument("lattice must have exactly the elements 0, 1, a, a', b, b'");
  const Elem a = l.at("a"), ac = l.at("a'"), b = l.at("b"), bc = l.at("b'");
  const Elem z = l.at("0"), o = l.at("1");
  if (l.bot() != z || l.top() != o || l.ocomp(a) != ac || l.ocomp(b) != bc || l.compatible(a, b))
    throw std::invalid_argument("lattice is not the horizontal sum of {0,1,a,a'} and {0,1,b,b'}");

  const Rat alpha = (r1 + r2) / Rat(2);
  const Rat beta = (u1 + u2) / Rat(2);
  const std::array<Elem, 6> cols = {a, ac, b, bc, z, o};
  const std::array<Rat, 6> row_a = {alpha, alpha, r1, r2, alpha, alpha};
  const std::array<Rat, 6> row_b = {u1, u2, beta, beta, beta, beta};

  BiMap g = BiMap::constant(mo2, Rat(0));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    g.set(a, cols[k], row_a[k]);
    g.set(ac, cols[k], Rat(1) - row_a[k]);
    g.set(b, cols[k], row_b[k]);
    g.set(bc, cols[k], Rat(1) - row_b[k]);
    g.set(z, cols[k], Rat(0));
    g.set(o, cols[k], Rat(1));
  }
  return g;
}

BiMap build_table3_family(const Rat& r1, const Rat& r2, const Rat& u1, const Rat& u2) {
  return build_table3_family(std::make_shared<const Oml>(mo(2)), r1, r2, u1, u2);
}

PurityResult is_pure_projection(const BiMap& g) {
  const Oml& l = g.lattice();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (g(a, b) != g(a, l.bot())) return {false, std::pair{a, b}};
  return {};
}

StateFn induced_state_from_smap(const BiMap& p) {
  StateFn m;
  for (Elem a = 0; a < p.lattice().size(); ++a) m.values.push_back(p(a, a));
  return m;
}

StateFn induced_state_from_gamma9(const BiMap& g, Elem b) {
  if (b >= g.lattice().size()) throw std::out_of_range("element index out of range");
  StateFn m;
  for (Elem a = 0; a < g.lattice().size(); ++a) m.values.push_back(g(a, b));
  return m;
}

namespace {

class IdentityChecker {
 public:
  bool expect(const char* id, std::vector<Elem> elems, const Rat& lhs, const Rat& rhs) {
    if (!report_.ok) return false;
    ++report_.checked;
    if (lhs == rhs) return true;
    report_.ok = false;
    report_.failure = IdentityFailure{id, std::move(elems), lhs, rhs};
    return false;
  }
  IdentityReport take() { return std::move(report_); }

 private:
  IdentityReport report_;
};

}  // namespace

IdentityReport verify_lemma_komp(const BiMap& g) {
  const Oml& l = g.lattice();
  const Elem z = l.bot();
  IdentityChecker ck;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) {
      if (!l.compatible(a, b)) continue;
      const Elem ab = l.meet(a, b);
      const Rat rhs = g(ab, ab) + g(l.meet(a, l.ocomp(b)), z) + g(z, l.meet(l.ocomp(a), b)) -
                      Rat(2) * g(z, z);
      if (!ck.expect("compatible-decomposition", {a, b}, g(a, b), rhs)) return ck.take();
    }
  return ck.take();
}

IdentityReport verify_gamma9_identities(const BiMap& g) {
  const Oml& l = g.lattice();
  const Elem z = l.bot(), o = l.top();
  const std::size_t n = l.size();
  IdentityChecker ck;
  for (Elem a = 0; a < n; ++a) {
    if (!ck.expect("top-row", {o, a}, g(o, a), Rat(1))) return ck.take();
    if (!ck.expect("bottom-row", {z, a}, g(z, a), Rat(0))) return ck.take();
  }
  for (Elem a = 0; a < n; ++a) {
    if (!ck.expect("diagonal", {a}, g(a, a), g(a, z))) return ck.take();
    if (!ck.expect("top-column", {a}, g(a, o), g(a, z))) return ck.take();
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!ck.expect("complement-average", {a, b}, g(a, z),
                     (g(a, b) + g(a, l.ocomp(b))) / Rat(2)))
        return ck.take();
  for (const auto& part : orthogonal_partitions_of_unity(l))
    for (Elem a = 0; a < n; ++a) {
      Rat sum;
      for (Elem b : part) sum += g(a, b);
      std::vector<Elem> elems{a};
      elems.insert(elems.end(), part.begin(), part.end());
      if (!ck.expect("partition-average", std::move(elems), g(a, z),
                     sum / Rat(static_cast<long>(part.size()))))
        return ck.take();
    }
  return ck.take();
}

SemanticReport semantic_check_on_compatible(const BiMap& g) {
  const Oml& l = g.lattice();
  const Elem z = l.bot();
  const auto tag = classify_family(g);
  if (!tag.gamma) throw UnsupportedFamily("corner values are not all 0 or 1");
  const int gamma = *tag.gamma;
  if (gamma > 12)
    throw UnsupportedFamily("family Γ" + std::to_string(gamma) + " has no connective semantics");

  auto c = [&](Elem x) { return l.ocomp(x); };
  auto state = [&](auto f) {
    StateFn m;
    for (Elem x = 0; x < l.size(); ++x) m.values.push_back(f(x));
    return m;
  };
  auto diag = [&](Elem x) { return g(x, x); };
  auto row0 = [&](Elem x) { return g(x, z); };
  auto col0 = [&](Elem x) { return g(z, x); };
  auto flip = [](auto f) { return [f](Elem x) { return Rat(1) - f(x); }; };

  SemanticReport rep;
  rep.gamma = gamma;
  std::function<Elem(Elem, Elem)> connective;
  switch (gamma) {
    case 1: rep.connective = "0"; break;
    case 8: rep.connective = "1"; break;
    case 2:
      rep.connective = "a ^ b";
      rep.induced = state(diag);
      connective = [&](Elem a, Elem b) { return l.meet(a, b); };
      break;
    case 3:
      rep.connective = "a v b";
      rep.induced = state(diag);
      connective = [&](Elem a, Elem b) { return l.join(a, b); };
      break;
    case 4:
      rep.connective = "(a <=> b)'";
      rep.induced = state(row0);
      connective = [&](Elem a, Elem b) { return l.join(l.meet(a, c(b)), l.meet(c(a), b)); };
      break;
    case 5:
      rep.connective = "a' v b'";
      rep.induced = state(flip(diag));
      connective = [&](Elem a, Elem b) { return l.join(c(a), c(b)); };
      break;
    case 6:
      rep.connective = "a' ^ b'";
      rep.induced = state(flip(diag));
      connective = [&](Elem a, Elem b) { return l.meet(c(a), c(b)); };
      break;
    case 7:
      rep.connective = "a <=> b";
      rep.induced = state(flip(row0));
      connective = [&](Elem a, Elem b) { return l.join(l.meet(a, b), l.meet(c(a), c(b))); };
      break;
    case 9:
      rep.connective = "a";
      rep.induced = state(row0);
      connective = [](Elem a, Elem) { return a; };
      break;
    case 10:
      rep.connective = "b";
      rep.induced = state(col0);
      connective = [](Elem, Elem b) { return b; };
      break;
    case 11:
      rep.connective = "a'";
      rep.induced = state(flip(row0));
      connective = [&](Elem a, Elem) { return c(a); };
      break;
    case 12:
      rep.connective = "b'";
      rep.induced = state(flip(col0));
      connective = [&](Elem, Elem b) { return c(b); };
      break;
    default: break;
  }
  if (rep.induced) {
    if (auto v = validate_state(l, *rep.induced)) rep.induced_state_problem = *v;
  }

  const std::string id = "G(a,b) = " + (connective ? "m(" + rep.connective + ")" : rep.connective);
  IdentityChecker ck;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) {
      if (!l.compatible(a, b)) continue;
      Rat expected = gamma == 1 ? Rat(0) : gamma == 8 ? Rat(1) : (*rep.induced)(connective(a, b));
      if (!ck.expect(id.c_str(), {a, b}, g(a, b), expected)) {
        rep.pairs = ck.take();
        return rep;
      }
    }
  rep.pairs = ck.take();
  return rep;
}

namespace {

class SystemBuilder {
 public:
  SystemBuilder(const Oml& l, char prefix) : l_(l), n_(l.size()) {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        const std::size_t v =
            sys_.add_var(std::string(1, prefix) + "(" + l.name(a) + "|" + l.name(b) + ")");
        sys_.add_bounds(v, Rat(0), Rat(1));
      }
  }

  std::size_t var(Elem a, Elem b) const { return a * n_ + b; }

  /// Adds Σ coeff · x(a, b) = rhs, merging repeated variables.
  void eq(std::initializer_list<std::tuple<long, Elem, Elem>> terms, const Rat& rhs) {
    Terms t;
    for (const auto& [k, a, b] : terms) {
      const std::size_t v = var(a, b);
      auto it = std::find_if(t.begin(), t.end(), [&](const auto& e) { return e.first == v; });
      if (it == t.end()) t.emplace_back(v, Rat(k));
      else it->second += Rat(k);
    }
    std::erase_if(t, [](const auto& e) { return e.second.is_zero(); });
    if (t.empty()) {
      if (!rhs.is_zero()) sys_.add_eq({}, rhs);
      return;
    }
    sys_.add_eq(t, rhs);
  }

  /// Each unordered orthogonal pair once, a <= b by index.
  template <class F>
  void orthogonal_pairs(F&& f) const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a; b < n_; ++b)
        if (l_.orthogonal(a, b)) f(a, b);
  }

  const Oml& lattice() const { return l_; }
  std::size_t size() const { return n_; }
  LinSystem take() { return std::move(sys_); }

 private:
  const Oml& l_;
  std::size_t n_;
  LinSystem sys_;
};

}  // namespace

LinSystem smap_system(const Oml& l) {
  SystemBuilder sb(l, 'p');
  const Elem o = l.top();
  sb.eq({{1, o, o}}, Rat(1));
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    sb.eq({{1, a, b}}, Rat(0));
    sb.eq({{1, b, a}}, Rat(0));
  });
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    const Elem j = l.join(a, b);
    for (Elem c = 0; c < l.size(); ++c) {
      sb.eq({{1, j, c}, {-1, a, c}, {-1, b, c}}, Rat(0));
      sb.eq({{1, c, j}, {-1, c, a}, {-1, c, b}}, Rat(0));
    }
  });
  return sb.take();
}

LinSystem jmap_system(const Oml& l) {
  SystemBuilder sb(l, 'q');
  const Elem z = l.bot(), o = l.top();
  sb.eq({{1, z, z}}, Rat(0));
  sb.eq({{1, o, o}}, Rat(1));
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    sb.eq({{1, a, b}, {-1, a, a}, {-1, b, b}}, Rat(0));
    sb.eq({{1, b, a}, {-1, a, a}, {-1, b, b}}, Rat(0));
  });
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    const Elem j = l.join(a, b);
    for (Elem c = 0; c < l.size(); ++c) {
      sb.eq({{1, j, c}, {-1, a, c}, {-1, b, c}, {1, c, c}}, Rat(0));
      sb.eq({{1, c, j}, {-1, c, a}, {-1, c, b}, {1, c, c}}, Rat(0));
    }
  });
  return sb.take();
}

LinSystem dmap_system(const Oml& l) {
  SystemBuilder sb(l, 'd');
  const Elem z = l.bot(), o = l.top();
  for (Elem a = 0; a < l.size(); ++a) sb.eq({{1, a, a}}, Rat(0));
  sb.eq({{1, o, z}}, Rat(1));
  sb.eq({{1, z, o}}, Rat(1));
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    sb.eq({{1, a, b}, {-1, a, z}, {-1, z, b}}, Rat(0));
    sb.eq({{1, b, a}, {-1, b, z}, {-1, z, a}}, Rat(0));
  });
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    const Elem j = l.join(a, b);
    for (Elem c = 0; c < l.size(); ++c) {
      sb.eq({{1, j, c}, {-1, a, c}, {-1, b, c}, {1, z, c}}, Rat(0));
      sb.eq({{1, c, j}, {-1, c, a}, {-1, c, b}, {1, c, z}}, Rat(0));
    }
  });
  return sb.take();
}

LinSystem gmap_system(const Oml& l, const Corners& corners) {
  for (int c : corners)
    if (c != 0 && c != 1) throw std::invalid_argument("corner values must be 0 or 1");
  SystemBuilder sb(l, 'G');
  const Elem z = l.bot(), o = l.top();
  sb.eq({{1, z, z}}, Rat(corners[0]));
  sb.eq({{1, z, o}}, Rat(corners[1]));
  sb.eq({{1, o, z}}, Rat(corners[2]));
  sb.eq({{1, o, o}}, Rat(corners[3]));
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    sb.eq({{1, a, b}, {-1, a, z}, {-1, z, b}, {1, z, z}}, Rat(0));
    sb.eq({{1, b, a}, {-1, b, z}, {-1, z, a}, {1, z, z}}, Rat(0));
  });
  sb.orthogonal_pairs([&](Elem a, Elem b) {
    const Elem j = l.join(a, b);
    for (Elem c = 0; c < l.size(); ++c) {
      sb.eq({{1, j, c}, {-1, a, c}, {-1, b, c}, {1, z, c}}, Rat(0));
      sb.eq({{1, c, j}, {-1, c, a}, {-1, c, b}, {1, c, z}}, Rat(0));
    }
  });
  return sb.take();
}

BiMap bimap_from_vector(std::shared_ptr<const Oml> lattice, const RatVec& x) {
  return BiMap(std::move(lattice), x);
}

}  // namespace omlprob
