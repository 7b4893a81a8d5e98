#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace omlprob {

/// Index of an element inside an Oml. Only meaningful together with the
/// lattice that produced it.
using Elem = std::size_t;

/// Unvalidated lattice description, as read from a file or built by hand.
struct RawLattice {
  std::vector<std::string> elements;
  /// Pairs (x, y) meaning x <= y. Interpreted as covering pairs when
  /// `order_is_covers` is set; either way the reflexive-transitive closure is
  /// taken before anything is checked.
  std::vector<std::pair<std::string, std::string>> order;
  bool order_is_covers = false;
  std::map<std::string, std::string> comp;
  std::string bot = "0";
  std::string top = "1";
};

enum class LatticeFault {
  TooLarge,
  Malformed,
  NotAPartialOrder,
  BoundsViolation,
  NotALattice,
  ComplementAxiom,
  OrthomodularLawFailure,
};

const char* to_string(LatticeFault fault);

struct LatticeViolation {
  LatticeFault fault = LatticeFault::Malformed;
  /// 1, 2 or 3 for ComplementAxiom (involution, antitone, a v a' = 1);
  /// 4 for OrthomodularLawFailure; 0 otherwise.
  int axiom = 0;
  std::vector<std::string> witnesses;
  std::string message;
};

class LatticeError : public std::runtime_error {
 public:
  explicit LatticeError(LatticeViolation v);
  const LatticeViolation& violation() const noexcept { return violation_; }

 private:
  LatticeViolation violation_;
};

/// Thrown by horizontal_sum when a summand has fewer than four elements.
class PartTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PairRelation { Orthogonal, Compatible, Incompatible };

const char* to_string(PairRelation rel);

struct PairClass {
  PairRelation tag = PairRelation::Incompatible;
  /// a ∧ b and a ∧ b'; set whenever tag != Incompatible.
  std::optional<Elem> meet_with;
  std::optional<Elem> meet_with_complement;
};

/// Upper bound on lattice size: 64, or the value of OMLPROB_MAX_ELEMENTS.
std::size_t default_max_elements();

class Oml;

std::variant<Oml, LatticeViolation> validate_oml(const RawLattice& raw,
                                                 std::size_t max_elements = default_max_elements());

/// Like validate_oml but throws LatticeError on failure.
Oml make_oml(const RawLattice& raw, std::size_t max_elements = default_max_elements());

/// A finite orthomodular lattice with precomputed meet, join and complement
/// tables. Immutable once built; only validate_oml constructs one.
class Oml {
 public:
  std::size_t size() const noexcept { return names_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem x) const { return names_.at(x); }
  std::optional<Elem> find(const std::string& name) const;
  /// Throws std::out_of_range for unknown names.
  Elem at(const std::string& name) const;

  Elem bot() const noexcept { return bot_; }
  Elem top() const noexcept { return top_; }

  bool leq(Elem a, Elem b) const { return leq_[a * size() + b] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem ocomp(Elem a) const { return comp_[a]; }

  /// a ⊥ b, tested as a <= b'.
  bool orthogonal(Elem a, Elem b) const { return leq(a, ocomp(b)); }
  /// a ↔ b, tested as a = (a ∧ b) ∨ (a ∧ b').
  bool compatible(Elem a, Elem b) const;
  PairClass classify_pair(Elem a, Elem b) const;

  /// Covering pairs of the order, in element order.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// Round-trippable description using covering pairs.
  RawLattice to_raw() const;

  friend bool operator==(const Oml& a, const Oml& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_ && a.comp_ == b.comp_ && a.bot_ == b.bot_ &&
           a.top_ == b.top_;
  }

 private:
  friend std::variant<Oml, LatticeViolation> validate_oml(const RawLattice&, std::size_t);
  Oml() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<char> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> comp_;
  Elem bot_ = 0;
  Elem top_ = 0;
};

/// Power set of `n_atoms` atoms. Atoms are named a1..an; other elements are
/// joins of atoms written "a1+a3". The empty set is "0", the full set "1".
Oml boolean_algebra(std::size_t n_atoms);

/// Horizontal sum of n four-element Boolean blocks {0, 1, x, x'}. Pairs are
/// named a/a', b/b', ... for n <= 26 and e1/e1', e2/e2', ... beyond that.
Oml mo(std::size_t n);

/// Glues the parts at their bottoms and tops. Interior names are kept when
/// they are unique across parts, otherwise every interior element of part i
/// is renamed "p<i>.<name>".
Oml horizontal_sum(std::span<const Oml> parts);

/// Maximal Boolean subalgebras, each as a sorted element list; the list of
/// blocks is sorted lexicographically.
std::vector<std::vector<Elem>> blocks(const Oml& l);

/// True if `subset` is closed under meet, join and complement, contains
/// 0 and 1, and is distributive.
bool is_boolean_subalgebra(const Oml& l, std::span<const Elem> subset);

/// Every set of pairwise-orthogonal nonzero elements whose join is 1, each
/// sorted by element index. Such sets are automatically maximal.
std::vector<std::vector<Elem>> orthogonal_partitions_of_unity(const Oml& l);

/// Human-readable dump: element list, covers, complements.
std::string describe(const Oml& l);

}  // namespace omlprob
