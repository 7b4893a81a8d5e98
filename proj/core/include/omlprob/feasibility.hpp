#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omlprob/rational.hpp"

namespace omlprob {

using RatVec = std::vector<Rat>;

/// Sparse linear form: (variable index, coefficient) pairs.
using Terms = std::vector<std::pair<std::size_t, Rat>>;

struct LinConstraint {
  RatVec coeffs;
  Rat rhs;
};

/// Linear constraints over named rational variables. Equalities read
/// coeffs·x = rhs, inequalities coeffs·x <= rhs.
struct LinSystem {
  std::vector<std::string> vars;
  std::vector<LinConstraint> eqs;
  std::vector<LinConstraint> ineqs;

  std::size_t add_var(std::string name);
  std::size_t size() const noexcept { return vars.size(); }

  void add_eq(const Terms& terms, const Rat& rhs);
  void add_le(const Terms& terms, const Rat& rhs);
  void add_ge(const Terms& terms, const Rat& rhs);
  /// lo <= x_var <= hi
  void add_bounds(std::size_t var, const Rat& lo, const Rat& hi);

  RatVec dense(const Terms& terms) const;

  /// Exact membership test.
  bool satisfied_by(const RatVec& x) const;

  /// Debug dump, one constraint per line: "2 x + -1 y <= 3".
  std::string dump() const;
};

enum class PolyStatus { Empty, Point, PositiveDimensional };

const char* to_string(PolyStatus s);

struct PolyInfo {
  PolyStatus status = PolyStatus::Empty;
  /// Affine dimension, -1 when empty.
  int dim = -1;
  std::optional<RatVec> witness;
  std::optional<std::vector<RatVec>> vertices;
};

/// Dual multipliers proving max{c·x : system} <= bound:
/// ineq_multipliers >= 0 and
///   Σ λ_i a_i + Σ μ_j e_j = c,   Σ λ_i b_i + Σ μ_j f_j = bound.
struct DualCertificate {
  RatVec ineq_multipliers;
  RatVec eq_multipliers;
  Rat bound;
};

/// Checks a certificate against the system independently of the solver.
bool verify_certificate(const LinSystem& sys, const RatVec& objective, const DualCertificate& cert);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVec point;
  std::optional<DualCertificate> certificate;
};

class Unbounded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A LinSystem preprocessed for repeated optimisation: equalities are
/// eliminated once, leaving x = origin + basis·y and a deduplicated set of
/// inequalities over y.
class Polyhedron {
 public:
  explicit Polyhedron(LinSystem sys);

  const LinSystem& system() const noexcept { return source_; }
  std::size_t reduced_dim() const noexcept { return basis_.size(); }
  bool trivially_empty() const noexcept { return inconsistent_; }

  /// New polyhedron with extra constraints (over the same variables).
  Polyhedron restrict(const std::vector<LinConstraint>& extra_eqs,
                      const std::vector<LinConstraint>& extra_ineqs) const;

  /// Exact maximum of objective·x. With `with_certificate`, an Optimal
  /// result carries dual multipliers over the source system. For minimize
  /// the certificate bounds -objective·x from above.
  LpResult maximize(const RatVec& objective, bool with_certificate = false) const;
  LpResult minimize(const RatVec& objective, bool with_certificate = false) const;

  std::optional<RatVec> feasible_point() const;

  /// Status, affine dimension and a witness.
  PolyInfo info() const;

  /// Indices (into system().ineqs) of inequalities tight on the whole set.
  std::vector<std::size_t> implicit_equalities() const;

  /// Every vertex, unsorted. Throws Unbounded.
  std::vector<RatVec> vertices() const;

 private:
  struct Row {
    RatVec g;  // over y
    Rat h;
    std::size_t source;  // index into source_.ineqs
    Rat scale;           // reduced row = scale * (a_i N, b_i - a_i x0)
  };

  /// Equalities in reduced echelon form, each row carrying its combination
  /// of source equalities. Rows of a later level vanish on the pivots of
  /// every earlier level; restrict() appends a level.
  struct EqLevel;

  Polyhedron() = default;
  void reduce();
  void add_eq_level(std::size_t first_source);
  RatVec eq_multipliers(RatVec residual) const;
  RatVec lift(const RatVec& y) const;
  RatVec project_objective(const RatVec& c) const;

  LinSystem source_;
  bool inconsistent_ = false;
  RatVec origin_;
  std::vector<RatVec> basis_;  // each of length source_.size()
  std::vector<Row> rows_;
  std::vector<std::shared_ptr<const EqLevel>> eq_levels_;
};

/// Status, affine dimension and one feasible point.
PolyInfo solve(const LinSystem& sys);

struct VertexList {
  std::vector<RatVec> vertices;  // lexicographically sorted
  bool cap_exceeded = false;
};

/// All vertices of a bounded polytope, at most `cap` of them (the first `cap`
/// in lexicographic order when more exist). Throws Unbounded.
VertexList enumerate_vertices(const LinSystem& sys, std::size_t cap);

struct ImpliedResult {
  bool implied = false;
  /// System has no feasible point; the target then holds vacuously.
  bool vacuous = false;
  Rat max_value;
  /// Maximiser of the target's left side; a counterexample when !implied.
  RatVec point;
  std::optional<DualCertificate> certificate;
};

/// Decides whether target (coeffs·x <= rhs) holds on every point of sys by
/// exact maximisation. Throws Unbounded.
ImpliedResult certify_implied(const LinSystem& sys, const LinConstraint& target);
ImpliedResult certify_implied(const Polyhedron& poly, const LinConstraint& target);

/// Rank of a set of rational vectors.
std::size_t rank(std::vector<RatVec> rows);

}  // namespace omlprob
