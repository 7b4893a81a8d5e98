#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omlprob/bimap.hpp"
#include "omlprob/feasibility.hpp"
#include "omlprob/lattice.hpp"
#include "omlprob/rational.hpp"

namespace omlprob {

enum class Verdict { Implied, Violated };

const char* to_string(Verdict v);

/// One optimisation: max objective·x over the verdict's base system plus
/// `premise`, compared against `threshold`.
struct CertifiedInstance {
  std::vector<Elem> elements;
  std::vector<LinConstraint> premise;
  RatVec objective;
  Rat threshold;
  /// Premise infeasible: nothing to bound.
  bool vacuous = false;
  Rat max;
  std::optional<DualCertificate> certificate;

  bool holds() const { return vacuous || max <= threshold; }
};

struct Witness {
  std::vector<Elem> elements;
  /// The property's left side at the witness (for Jauch–Piron, the value of
  /// the conclusion term).
  Rat value;
  /// Element -> value for states, "x|y" -> value for maps.
  std::vector<std::pair<std::string, Rat>> assignment;
};

struct PropertyVerdict {
  std::string property;
  std::string scope;
  Verdict verdict = Verdict::Implied;
  /// Constraints every instance starts from.
  std::shared_ptr<const LinSystem> base;
  std::vector<CertifiedInstance> instances;
  /// Instance with the largest excess over its threshold, first in
  /// instance order on ties. Present iff violated.
  std::optional<Witness> witness;
  std::vector<PropertyVerdict> related;
};

/// Re-checks every non-vacuous instance certificate against the base system.
bool certificates_valid(const PropertyVerdict& v);

/// m(a) + m(b) - m(a∧b) <= 1 over all states, pairs a <= b by index.
PropertyVerdict bell1_state(const Oml& l);
/// p(a,a) + p(b,b) - p(a,b) <= 1 over all s-maps, all ordered pairs.
PropertyVerdict bell1_smap(const Oml& l);
/// m(a) + m(b) + m(c) - m(a∧b) - m(a∧c) - m(c∧b) <= 1, triples a <= b <= c.
PropertyVerdict bell2_state(const Oml& l);
/// p(a,a) + p(b,b) + p(c,c) - p(a,b) - p(a,c) - p(c,b) <= 1, ordered
/// triples. With `require_pseudometric` the s-maps are restricted to those
/// whose d_p is a pseudometric, and the unrestricted verdict is attached
/// under `related`.
PropertyVerdict bell2_smap(const Oml& l, bool require_pseudometric);
/// m(a) = m(b) = 1 implies m(a∧b) = 1, pairs a <= b.
PropertyVerdict jauch_piron_state(const Oml& l);
/// p(a,a) = p(b,b) = 1 implies p(a,b) = 1, ordered pairs. The identities
/// p(a,c) = p(c,a) = p(c,c) under p(a,a) = 1 are attached under `related`.
PropertyVerdict jauch_piron_smap(const Oml& l);

/// Constraints on the "p(x|y)" variables saying d_p is a pseudometric.
std::vector<LinConstraint> pseudometric_eqs(const Oml& l);
std::vector<LinConstraint> pseudometric_ineqs(const Oml& l);

struct PseudometricReport {
  bool ok = true;
  /// "reflexive", "symmetry" or "triangle".
  std::string axiom;
  std::vector<Elem> elements;
  Rat lhs;
  Rat rhs;
};

/// d(a,a) = 0, d(a,b) = d(b,a), d(a,b) <= d(a,c) + d(c,b); first failure in
/// lexicographic order.
PseudometricReport is_pseudometric(const BiMap& d);

struct LatticeSweep {
  std::size_t elements = 0;
  std::size_t vertices = 0;
  std::size_t examined = 0;
  bool cap_exceeded = false;
};

struct SweepReport {
  bool found = false;
  std::size_t lattice_index = 0;
  std::size_t vertex_index = 0;
  std::optional<BiMap> smap;
  std::optional<BiMap> dmap;
  PseudometricReport violation;
  std::vector<LatticeSweep> lattices;
};

/// Walks the lattices in order, the s-map polytope vertices of each in
/// lexicographic order (at most `cap` per lattice), and stops at the first
/// d_p that is not a pseudometric.
SweepReport search_pseudometric_violation(std::span<const Oml> lattices, std::size_t cap);

/// Named lattices used for suite-wide checks: 2^{1,2}, 2^{1,2,3}, MO(2),
/// MO(3) and the horizontal sum of 2^{1,2}, 2^{1,2} and 2^{1,2,3}.
std::vector<std::pair<std::string, Oml>> builtin_suite();

}  // namespace omlprob
