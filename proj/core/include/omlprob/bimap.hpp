#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omlprob/feasibility.hpp"
#include "omlprob/lattice.hpp"
#include "omlprob/rational.hpp"
#include "omlprob/states.hpp"

namespace omlprob {

/// A total map L × L → Q. Values are stored row-major, so (a, b) lives at
/// a * |L| + b; the same layout is used for the variables of the
/// *_system builders.
class BiMap {
 public:
  BiMap(std::shared_ptr<const Oml> lattice, std::vector<Rat> values);

  static BiMap constant(std::shared_ptr<const Oml> lattice, const Rat& value);
  static BiMap from_function(std::shared_ptr<const Oml> lattice,
                             const std::function<Rat(Elem, Elem)>& f);

  const Oml& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const Oml>& lattice_ptr() const noexcept { return lattice_; }

  const Rat& operator()(Elem a, Elem b) const { return values_[index(a, b)]; }
  void set(Elem a, Elem b, Rat value) { values_[index(a, b)] = std::move(value); }

  std::size_t index(Elem a, Elem b) const { return a * lattice_->size() + b; }
  const std::vector<Rat>& values() const noexcept { return values_; }

  friend bool operator==(const BiMap& x, const BiMap& y) {
    return (x.lattice_ == y.lattice_ || *x.lattice_ == *y.lattice_) && x.values_ == y.values_;
  }

 private:
  std::shared_ptr<const Oml> lattice_;
  std::vector<Rat> values_;
};

enum class MapSystem { S, J, D, G };

const char* to_string(MapSystem s);

struct AxiomViolation {
  /// Axiom id: "range", "s1".."s3", "j1".."j3", "d1".."d3", "G1".."G3", with
  /// a "-row" / "-column" suffix for the two identities of the third axiom.
  std::string axiom;
  std::vector<Elem> elements;
  Rat lhs;
  Rat rhs;
};

struct AxiomReport {
  MapSystem system = MapSystem::S;
  bool ok = true;
  std::optional<AxiomViolation> first_violation;
};

AxiomReport check_s_map(const BiMap& p);
AxiomReport check_j_map(const BiMap& q);
AxiomReport check_d_map(const BiMap& d);
AxiomReport check_g_map(const BiMap& g);
AxiomReport check_map(const BiMap& m, MapSystem system);

/// Corner values (G(0,0), G(0,1), G(1,0), G(1,1)), each 0 or 1.
using Corners = std::array<int, 4>;

/// Γ index 1..16 for a corner pattern.
int gamma_of(const Corners& c);
Corners corners_of(int gamma);

struct FamilyTag {
  std::array<Rat, 4> corners;
  /// Empty when some corner is not 0 or 1.
  std::optional<int> gamma;
};

FamilyTag classify_family(const BiMap& g);

/// 1 - G, pointwise.
BiMap complement_map(const BiMap& g);

/// q_p(a, b) = p(a, a) + p(b, b) - p(a, b).
BiMap derive_j_from_s(const BiMap& p);
/// d_p(a, b) = p(a, b') + p(a', b).
BiMap derive_d_from_s(const BiMap& p);
/// G_p(a, b) = p(a, b) + p(a, b').
BiMap derive_pure_projection_from_s(const BiMap& p);

class ParamOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Γ9 map on the six-element horizontal sum {0, a, a', b, b', 1} with
/// rows a and b given by (α, α, r1, r2, α, α) and (u1, u2, β, β, β, β) over
/// columns (a, a', b, b', 0, 1), where α = (r1 + r2)/2 and β = (u1 + u2)/2;
/// rows a' and b' are the complements, row 0 is 0 and row 1 is 1.
/// The lattice must contain exactly the elements 0, 1, a, a', b, b' with
/// a and b in different blocks.
BiMap build_table3_family(std::shared_ptr<const Oml> mo2, const Rat& r1, const Rat& r2,
                          const Rat& u1, const Rat& u2);
/// Same, on a freshly built mo(2).
BiMap build_table3_family(const Rat& r1, const Rat& r2, const Rat& u1, const Rat& u2);

struct PurityResult {
  bool pure = true;
  /// First (a, b) in element order with G(a, b) != G(a, 0).
  std::optional<std::pair<Elem, Elem>> witness;
};

PurityResult is_pure_projection(const BiMap& g);

/// m_p(a) = p(a, a).
StateFn induced_state_from_smap(const BiMap& p);
/// m_b(a) = G(a, b).
StateFn induced_state_from_gamma9(const BiMap& g, Elem b);

struct IdentityFailure {
  std::string identity;
  std::vector<Elem> elements;
  Rat lhs;
  Rat rhs;
};

struct IdentityReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<IdentityFailure> failure;
};

/// For every compatible pair:
///   G(a,b) = G(a∧b, a∧b) + G(a∧b', 0) + G(0, a'∧b) - 2 G(0,0).
IdentityReport verify_lemma_komp(const BiMap& g);

/// The Γ9 identities: G(1,a) = 1 and G(0,a) = 0; G(a,0) = G(a,a) = G(a,1);
/// G(a,0) = (G(a,b) + G(a,b'))/2; and G(a,0) = (1/n) Σ G(a,b_i) over every
/// orthogonal partition b_1..b_n of 1.
IdentityReport verify_gamma9_identities(const BiMap& g);

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SemanticReport {
  int gamma = 0;
  std::string connective;
  /// Absent for the constant families Γ1 and Γ8.
  std::optional<StateFn> induced;
  /// Set when the induced map fails to be a state.
  std::optional<StateViolation> induced_state_problem;
  IdentityReport pairs;
};

/// For families Γ1..Γ12, checks on every compatible pair that G(a, b)
/// equals the induced state of the family's connective. Throws
/// UnsupportedFamily for Γ13..Γ16 and for invalid corners.
SemanticReport semantic_check_on_compatible(const BiMap& g);

/// Linear systems over the |L|² variables "p(x|y)" (resp. q, d, G) whose
/// solution sets are exactly the maps passing the matching checker.
LinSystem smap_system(const Oml& l);
LinSystem jmap_system(const Oml& l);
LinSystem dmap_system(const Oml& l);
LinSystem gmap_system(const Oml& l, const Corners& corners);

BiMap bimap_from_vector(std::shared_ptr<const Oml> lattice, const RatVec& x);

}  // namespace omlprob
