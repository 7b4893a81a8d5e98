#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omlprob/feasibility.hpp"
#include "omlprob/lattice.hpp"
#include "omlprob/lattice_io.hpp"
#include "omlprob/rational.hpp"

namespace omlprob {

/// Candidate state: one value per lattice element, indexed by Elem.
struct StateFn {
  std::vector<Rat> values;

  const Rat& operator()(Elem x) const { return values.at(x); }
  friend bool operator==(const StateFn&, const StateFn&) = default;
};

enum class StateFault { WrongSize, OutOfRange, NotNormalized, AdditivityFailure };

const char* to_string(StateFault fault);

struct StateViolation {
  StateFault fault = StateFault::WrongSize;
  std::vector<Elem> elements;
  std::string message;
};

/// Checks range, m(1) = 1, m(0) = 0 and additivity on every orthogonal pair.
/// Returns the first violation found, scanning elements and pairs in order.
std::optional<StateViolation> validate_state(const Oml& l, const StateFn& s);

/// One variable "m(x)" per element, with m(1) = 1, m(0) = 0, the box
/// 0 <= m(x) <= 1 and m(a v b) = m(a) + m(b) for every orthogonal pair.
LinSystem state_system(const Oml& l);

StateFn state_from_vector(const RatVec& x);

enum class StateClassTag { Stateless, UniqueState, QuantumLogic };

const char* to_string(StateClassTag tag);

struct StateClass {
  StateClassTag tag = StateClassTag::Stateless;
  PolyInfo polytope;
};

/// Classifies by the affine dimension of the state polytope: empty, a single
/// point, or positive-dimensional (infinitely many states). With
/// `vertex_cap`, the polytope's vertices are attached as well.
StateClass classify_states(const Oml& l, std::optional<std::size_t> vertex_cap = std::nullopt);

/// State file schema: {"<element>": "p/q", ...}, total on the lattice.
StateFn state_from_json(const Oml& l, const Json& j);
Json state_to_json(const Oml& l, const StateFn& s);

}  // namespace omlprob
