#include "omlprob/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

namespace omlprob {

const char* to_string(LatticeFault fault) {
  switch (fault) {
    case LatticeFault::TooLarge: return "TooLarge";
    case LatticeFault::Malformed: return "Malformed";
    case LatticeFault::NotAPartialOrder: return "NotAPartialOrder";
    case LatticeFault::BoundsViolation: return "BoundsViolation";
    case LatticeFault::NotALattice: return "NotALattice";
    case LatticeFault::ComplementAxiom: return "ComplementAxiom";
    case LatticeFault::OrthomodularLawFailure: return "OrthomodularLawFailure";
  }
  return "?";
}

const char* to_string(PairRelation rel) {
  switch (rel) {
    case PairRelation::Orthogonal: return "orthogonal";
    case PairRelation::Compatible: return "compatible";
    case PairRelation::Incompatible: return "incompatible";
  }
  return "?";
}

namespace {

std::string violation_message(const LatticeViolation& v) {
  std::string msg = to_string(v.fault);
  if (v.axiom != 0) msg += "(" + std::to_string(v.axiom) + ")";
  if (!v.witnesses.empty()) {
    msg += " at";
    for (const auto& w : v.witnesses) msg += " " + w;
  }
  if (!v.message.empty()) msg += ": " + v.message;
  return msg;
}

LatticeViolation fail(LatticeFault fault, int axiom, std::vector<std::string> witnesses,
                      std::string message) {
  return LatticeViolation{fault, axiom, std::move(witnesses), std::move(message)};
}

}  // namespace

LatticeError::LatticeError(LatticeViolation v)
    : std::runtime_error(violation_message(v)), violation_(std::move(v)) {}

std::size_t default_max_elements() {
  if (const char* env = std::getenv("OMLPROB_MAX_ELEMENTS")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) return value;
  }
  return 64;
}

std::variant<Oml, LatticeViolation> validate_oml(const RawLattice& raw, std::size_t max_elements) {
  const std::size_t n = raw.elements.size();
  if (n > max_elements) {
    return fail(LatticeFault::TooLarge, 0, {},
                std::to_string(n) + " elements exceeds the bound of " +
                    std::to_string(max_elements));
  }
  if (n < 2) return fail(LatticeFault::Malformed, 0, {}, "a lattice needs distinct 0 and 1");

  Oml l;
  l.names_ = raw.elements;
  for (Elem i = 0; i < n; ++i) {
    if (l.names_[i].empty()) return fail(LatticeFault::Malformed, 0, {}, "empty element name");
    if (!l.index_.emplace(l.names_[i], i).second) {
      return fail(LatticeFault::Malformed, 0, {l.names_[i]}, "duplicate element");
    }
  }
  auto lookup = [&](const std::string& name) -> std::optional<Elem> {
    auto it = l.index_.find(name);
    if (it == l.index_.end()) return std::nullopt;
    return it->second;
  };

  const auto bot = lookup(raw.bot);
  const auto top = lookup(raw.top);
  if (!bot || !top) return fail(LatticeFault::Malformed, 0, {}, "bot/top not among elements");
  if (*bot == *top) return fail(LatticeFault::Malformed, 0, {raw.bot}, "bot and top coincide");
  l.bot_ = *bot;
  l.top_ = *top;

  l.leq_.assign(n * n, 0);
  for (Elem i = 0; i < n; ++i) l.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : raw.order) {
    const auto a = lookup(lo);
    const auto b = lookup(hi);
    if (!a || !b) return fail(LatticeFault::Malformed, 0, {lo, hi}, "order pair names unknown element");
    l.leq_[*a * n + *b] = 1;
  }
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (!l.leq_[i * n + k]) continue;
      for (Elem j = 0; j < n; ++j) {
        if (l.leq_[k * n + j]) l.leq_[i * n + j] = 1;
      }
    }
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (l.leq_[i * n + j] && l.leq_[j * n + i]) {
        return fail(LatticeFault::NotAPartialOrder, 0, {l.names_[i], l.names_[j]},
                    "antisymmetry fails");
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (!l.leq(l.bot_, x) || !l.leq(x, l.top_)) {
      return fail(LatticeFault::BoundsViolation, 0, {l.names_[x]}, "element not between 0 and 1");
    }
  }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::optional<Elem> glb;
      std::optional<Elem> lub;
      for (Elem c = 0; c < n; ++c) {
        if (l.leq(c, a) && l.leq(c, b)) {
          bool greatest = true;
          for (Elem d = 0; d < n && greatest; ++d) {
            if (l.leq(d, a) && l.leq(d, b) && !l.leq(d, c)) greatest = false;
          }
          if (greatest) glb = c;
        }
        if (l.leq(a, c) && l.leq(b, c)) {
          bool least = true;
          for (Elem d = 0; d < n && least; ++d) {
            if (l.leq(a, d) && l.leq(b, d) && !l.leq(c, d)) least = false;
          }
          if (least) lub = c;
        }
      }
      if (!glb) return fail(LatticeFault::NotALattice, 0, {l.names_[a], l.names_[b]}, "no meet");
      if (!lub) return fail(LatticeFault::NotALattice, 0, {l.names_[a], l.names_[b]}, "no join");
      l.meet_[a * n + b] = *glb;
      l.join_[a * n + b] = *lub;
    }
  }

  l.comp_.assign(n, 0);
  for (const auto& [from, to] : raw.comp) {
    if (!lookup(from) || !lookup(to)) {
      return fail(LatticeFault::Malformed, 0, {from, to}, "complement names unknown element");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    auto it = raw.comp.find(l.names_[x]);
    if (it == raw.comp.end()) {
      return fail(LatticeFault::Malformed, 0, {l.names_[x]}, "complement missing");
    }
    l.comp_[x] = *lookup(it->second);
  }

  for (Elem a = 0; a < n; ++a) {
    if (l.ocomp(l.ocomp(a)) != a) {
      return fail(LatticeFault::ComplementAxiom, 1, {l.names_[a]}, "a'' != a");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (l.leq(a, b) && !l.leq(l.ocomp(b), l.ocomp(a))) {
        return fail(LatticeFault::ComplementAxiom, 2, {l.names_[a], l.names_[b]},
                    "a <= b but not b' <= a'");
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (l.join(a, l.ocomp(a)) != l.top_ || l.meet(a, l.ocomp(a)) != l.bot_) {
      return fail(LatticeFault::ComplementAxiom, 3, {l.names_[a]}, "a v a' != 1");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (l.leq(a, b) && l.join(a, l.meet(l.ocomp(a), b)) != b) {
        return fail(LatticeFault::OrthomodularLawFailure, 4, {l.names_[a], l.names_[b]},
                    "a <= b but b != a v (a' ^ b)");
      }
    }
  }
  return l;
}

Oml make_oml(const RawLattice& raw, std::size_t max_elements) {
  auto result = validate_oml(raw, max_elements);
  if (auto* v = std::get_if<LatticeViolation>(&result)) throw LatticeError(std::move(*v));
  return std::get<Oml>(std::move(result));
}

std::optional<Elem> Oml::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Oml::at(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown element '" + name + "'");
  return it->second;
}

bool Oml::compatible(Elem a, Elem b) const {
  return join(meet(a, b), meet(a, ocomp(b))) == a;
}

PairClass Oml::classify_pair(Elem a, Elem b) const {
  PairClass pc;
  if (orthogonal(a, b)) {
    pc.tag = PairRelation::Orthogonal;
  } else if (compatible(a, b)) {
    pc.tag = PairRelation::Compatible;
  } else {
    return pc;
  }
  pc.meet_with = meet(a, b);
  pc.meet_with_complement = meet(a, ocomp(b));
  return pc;
}

std::vector<std::pair<Elem, Elem>> Oml::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (Elem c = 0; c < n && direct; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

RawLattice Oml::to_raw() const {
  RawLattice raw;
  raw.elements = names_;
  raw.order_is_covers = true;
  for (auto [a, b] : covers()) raw.order.emplace_back(names_[a], names_[b]);
  for (Elem x = 0; x < size(); ++x) raw.comp[names_[x]] = names_[comp_[x]];
  raw.bot = names_[bot_];
  raw.top = names_[top_];
  return raw;
}

Oml boolean_algebra(std::size_t n_atoms) {
  if (n_atoms == 0 || n_atoms > 20) {
    throw std::invalid_argument("boolean_algebra: atom count must be in 1..20");
  }
  const std::size_t count = std::size_t{1} << n_atoms;
  const std::size_t full = count - 1;
  auto name = [&](std::size_t mask) -> std::string {
    if (mask == 0) return "0";
    if (mask == full) return "1";
    std::string s;
    for (std::size_t i = 0; i < n_atoms; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (!s.empty()) s += '+';
        s += "a" + std::to_string(i + 1);
      }
    }
    return s;
  };
  RawLattice raw;
  raw.order_is_covers = true;
  for (std::size_t m = 0; m < count; ++m) {
    raw.elements.push_back(name(m));
    raw.comp[name(m)] = name(full & ~m);
    for (std::size_t i = 0; i < n_atoms; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (!(m & bit)) raw.order.emplace_back(name(m), name(m | bit));
    }
  }
  return make_oml(raw);
}

Oml mo(std::size_t n) {
  if (n < 2) throw std::invalid_argument("mo: need at least two blocks");
  RawLattice raw;
  raw.elements.push_back("0");
  raw.comp["0"] = "1";
  raw.comp["1"] = "0";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string x = n <= 26 ? std::string(1, static_cast<char>('a' + i))
                                  : "e" + std::to_string(i + 1);
    const std::string xc = x + "'";
    raw.elements.push_back(x);
    raw.elements.push_back(xc);
    raw.comp[x] = xc;
    raw.comp[xc] = x;
    for (const auto& e : {x, xc}) {
      raw.order.emplace_back("0", e);
      raw.order.emplace_back(e, "1");
    }
  }
  raw.elements.push_back("1");
  raw.order_is_covers = true;
  return make_oml(raw);
}

Oml horizontal_sum(std::span<const Oml> parts) {
  if (parts.empty()) throw std::invalid_argument("horizontal_sum: no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() < 4) {
      throw PartTooSmall("horizontal_sum: part " + std::to_string(i + 1) + " has " +
                         std::to_string(parts[i].size()) + " elements, need at least 4");
    }
  }

  std::set<std::string> seen;
  bool clash = false;
  for (const auto& part : parts) {
    for (Elem x = 0; x < part.size(); ++x) {
      if (x == part.bot() || x == part.top()) continue;
      const auto& nm = part.name(x);
      if (nm == "0" || nm == "1" || !seen.insert(nm).second) clash = true;
    }
  }

  RawLattice raw;
  raw.order_is_covers = false;
  raw.elements.push_back("0");
  raw.comp["0"] = "1";
  raw.comp["1"] = "0";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    auto rename = [&](Elem x) -> std::string {
      if (x == part.bot()) return "0";
      if (x == part.top()) return "1";
      return clash ? "p" + std::to_string(i + 1) + "." + part.name(x) : part.name(x);
    };
    for (Elem x = 0; x < part.size(); ++x) {
      if (x == part.bot() || x == part.top()) continue;
      raw.elements.push_back(rename(x));
      raw.comp[rename(x)] = rename(part.ocomp(x));
    }
    for (auto [a, b] : part.covers()) raw.order.emplace_back(rename(a), rename(b));
  }
  raw.elements.push_back("1");
  return make_oml(raw);
}

namespace {

void bron_kerbosch(const Oml& l, const std::vector<std::vector<char>>& adj, std::vector<Elem>& r,
                   std::vector<Elem> p, std::vector<Elem> x, std::vector<std::vector<Elem>>& out) {
  if (p.empty() && x.empty()) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Pivot on the vertex of P ∪ X with the most neighbours in P.
  Elem pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (Elem u : *set) {
      std::size_t deg = 0;
      for (Elem v : p) deg += adj[u][v] ? 1 : 0;
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
  }
  const std::vector<Elem> candidates = [&] {
    std::vector<Elem> c;
    for (Elem v : p) {
      if (!adj[pivot][v]) c.push_back(v);
    }
    return c;
  }();
  for (Elem v : candidates) {
    std::vector<Elem> p2;
    std::vector<Elem> x2;
    for (Elem w : p) {
      if (adj[v][w]) p2.push_back(w);
    }
    for (Elem w : x) {
      if (adj[v][w]) x2.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(l, adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<Elem>> blocks(const Oml& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      adj[a][b] = (a != b && l.compatible(a, b) && l.compatible(b, a)) ? 1 : 0;
    }
  }
  std::vector<Elem> all(n);
  for (Elem i = 0; i < n; ++i) all[i] = i;
  std::vector<Elem> r;
  std::vector<std::vector<Elem>> out;
  bron_kerbosch(l, adj, r, all, {}, out);
  std::sort(out.begin(), out.end());
  for (const auto& block : out) {
    if (!is_boolean_subalgebra(l, block)) {
      throw std::logic_error("maximal compatible set is not a Boolean subalgebra");
    }
  }
  return out;
}

bool is_boolean_subalgebra(const Oml& l, std::span<const Elem> subset) {
  std::vector<char> in(l.size(), 0);
  for (Elem x : subset) in.at(x) = 1;
  if (!in[l.bot()] || !in[l.top()]) return false;
  for (Elem x : subset) {
    if (!in[l.ocomp(x)]) return false;
    for (Elem y : subset) {
      if (!in[l.meet(x, y)] || !in[l.join(x, y)]) return false;
    }
  }
  for (Elem x : subset) {
    for (Elem y : subset) {
      for (Elem z : subset) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
      }
    }
  }
  return true;
}

namespace {

void extend_partition(const Oml& l, std::vector<Elem>& current, Elem acc, Elem next,
                      std::vector<std::vector<Elem>>& out) {
  if (acc == l.top()) {
    out.push_back(current);
    return;
  }
  for (Elem x = next; x < l.size(); ++x) {
    if (x == l.bot() || !l.orthogonal(x, acc)) continue;
    current.push_back(x);
    extend_partition(l, current, l.join(acc, x), x + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Elem>> orthogonal_partitions_of_unity(const Oml& l) {
  // x ⊥ (b1 v ... v bk) iff x ⊥ bi for every i, so tracking the join suffices.
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> current;
  extend_partition(l, current, l.bot(), 0, out);
  return out;
}

std::string describe(const Oml& l) {
  std::ostringstream os;
  os << "elements (" << l.size() << "):";
  for (const auto& nm : l.names()) os << ' ' << nm;
  os << "\ncovers:";
  for (auto [a, b] : l.covers()) os << ' ' << l.name(a) << "<" << l.name(b);
  os << "\ncomplements:";
  for (Elem x = 0; x < l.size(); ++x) os << ' ' << l.name(x) << "->" << l.name(l.ocomp(x));
  os << "\nbot: " << l.name(l.bot()) << "  top: " << l.name(l.top()) << '\n';
  return os.str();
}

}  // namespace omlprob
