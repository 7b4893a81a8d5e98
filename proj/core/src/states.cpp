#include "omlprob/states.hpp"

namespace omlprob {

const char* to_string(StateFault fault) {
  switch (fault) {
    case StateFault::WrongSize: return "WrongSize";
    case StateFault::OutOfRange: return "OutOfRange";
    case StateFault::NotNormalized: return "NotNormalized";
    case StateFault::AdditivityFailure: return "AdditivityFailure";
  }
  return "?";
}

const char* to_string(StateClassTag tag) {
  switch (tag) {
    case StateClassTag::Stateless: return "stateless";
    case StateClassTag::UniqueState: return "unique-state";
    case StateClassTag::QuantumLogic: return "quantum-logic";
  }
  return "?";
}

std::optional<StateViolation> validate_state(const Oml& l, const StateFn& s) {
  if (s.values.size() != l.size()) {
    return StateViolation{StateFault::WrongSize, {}, "state must assign a value to every element"};
  }
  for (Elem x = 0; x < l.size(); ++x) {
    if (!in_unit_interval(s(x))) {
      return StateViolation{StateFault::OutOfRange, {x}, "m(" + l.name(x) + ") = " + s(x).str()};
    }
  }
  if (s(l.top()) != Rat(1)) {
    return StateViolation{StateFault::NotNormalized, {l.top()}, "m(1) = " + s(l.top()).str()};
  }
  if (!s(l.bot()).is_zero()) {
    return StateViolation{StateFault::NotNormalized, {l.bot()}, "m(0) = " + s(l.bot()).str()};
  }
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = a; b < l.size(); ++b) {
      if (!l.orthogonal(a, b)) continue;
      const Rat lhs = s(l.join(a, b));
      const Rat rhs = s(a) + s(b);
      if (lhs != rhs) {
        return StateViolation{StateFault::AdditivityFailure, {a, b},
                              "m(" + l.name(a) + " v " + l.name(b) + ") = " + lhs.str() +
                                  " but m(a) + m(b) = " + rhs.str()};
      }
    }
  }
  return std::nullopt;
}

LinSystem state_system(const Oml& l) {
  LinSystem sys;
  for (Elem x = 0; x < l.size(); ++x) sys.add_var("m(" + l.name(x) + ")");
  sys.add_eq({{l.top(), Rat(1)}}, Rat(1));
  sys.add_eq({{l.bot(), Rat(1)}}, Rat(0));
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = a; b < l.size(); ++b) {
      if (!l.orthogonal(a, b)) continue;
      sys.add_eq({{l.join(a, b), Rat(1)}, {a, Rat(-1)}, {b, Rat(-1)}}, Rat(0));
    }
  }
  for (Elem x = 0; x < l.size(); ++x) sys.add_bounds(x, Rat(0), Rat(1));
  return sys;
}

StateFn state_from_vector(const RatVec& x) { return StateFn{x}; }

StateClass classify_states(const Oml& l, std::optional<std::size_t> vertex_cap) {
  const LinSystem sys = state_system(l);
  StateClass out;
  out.polytope = solve(sys);
  switch (out.polytope.status) {
    case PolyStatus::Empty: out.tag = StateClassTag::Stateless; break;
    case PolyStatus::Point: out.tag = StateClassTag::UniqueState; break;
    case PolyStatus::PositiveDimensional: out.tag = StateClassTag::QuantumLogic; break;
  }
  if (vertex_cap) out.polytope.vertices = enumerate_vertices(sys, *vertex_cap).vertices;
  return out;
}

StateFn state_from_json(const Oml& l, const Json& j) {
  if (!j.is_object()) throw FormatError("state file must hold a JSON object");
  StateFn s{std::vector<Rat>(l.size())};
  std::vector<char> seen(l.size(), 0);
  for (const auto& [key, value] : j.items()) {
    const auto x = l.find(key);
    if (!x) throw FormatError("state names unknown element '" + key + "'");
    if (!value.is_string()) throw FormatError("state values must be \"p/q\" strings");
    try {
      s.values[*x] = Rat::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    seen[*x] = 1;
  }
  for (Elem x = 0; x < l.size(); ++x) {
    if (!seen[x]) throw FormatError("state has no value for '" + l.name(x) + "'");
  }
  return s;
}

Json state_to_json(const Oml& l, const StateFn& s) {
  Json j = Json::object();
  for (Elem x = 0; x < l.size(); ++x) j[l.name(x)] = s(x).str();
  return j;
}

}  // namespace omlprob
