#include "omlprob/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace omlprob {

// ---------------------------------------------------------------------------
// LinSystem

std::size_t LinSystem::add_var(std::string name) {
  vars.push_back(std::move(name));
  for (auto& c : eqs) c.coeffs.emplace_back(0);
  for (auto& c : ineqs) c.coeffs.emplace_back(0);
  return vars.size() - 1;
}

RatVec LinSystem::dense(const Terms& terms) const {
  RatVec v(vars.size());
  for (const auto& [i, c] : terms) v.at(i) += c;
  return v;
}

void LinSystem::add_eq(const Terms& terms, const Rat& rhs) { eqs.push_back({dense(terms), rhs}); }
void LinSystem::add_le(const Terms& terms, const Rat& rhs) { ineqs.push_back({dense(terms), rhs}); }

void LinSystem::add_ge(const Terms& terms, const Rat& rhs) {
  Terms neg;
  neg.reserve(terms.size());
  for (const auto& [i, c] : terms) neg.emplace_back(i, -c);
  add_le(neg, -rhs);
}

void LinSystem::add_bounds(std::size_t var, const Rat& lo, const Rat& hi) {
  add_ge({{var, Rat(1)}}, lo);
  add_le({{var, Rat(1)}}, hi);
}

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

bool LinSystem::satisfied_by(const RatVec& x) const {
  if (x.size() != vars.size()) return false;
  for (const auto& c : eqs) {
    if (dot(c.coeffs, x) != c.rhs) return false;
  }
  for (const auto& c : ineqs) {
    if (dot(c.coeffs, x) > c.rhs) return false;
  }
  return true;
}

std::string LinSystem::dump() const {
  std::ostringstream os;
  auto emit = [&](const LinConstraint& c, const char* op) {
    bool first = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (c.coeffs[i].is_zero()) continue;
      if (!first) os << " + ";
      os << c.coeffs[i] << ' ' << vars[i];
      first = false;
    }
    if (first) os << '0';
    os << ' ' << op << ' ' << c.rhs << '\n';
  };
  for (const auto& c : eqs) emit(c, "=");
  for (const auto& c : ineqs) emit(c, "<=");
  return os.str();
}

const char* to_string(PolyStatus s) {
  switch (s) {
    case PolyStatus::Empty: return "empty";
    case PolyStatus::Point: return "point";
    case PolyStatus::PositiveDimensional: return "positive-dimensional";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Linear algebra helpers

namespace {

struct AffineParam {
  bool consistent = true;
  RatVec origin;
  std::vector<RatVec> basis;
};

/// Solution set of eqs over n variables as origin + span(basis), by
/// Gauss-Jordan elimination. Free variables are the non-pivot columns in
/// index order.
AffineParam parametrize(const std::vector<LinConstraint>& eqs, std::size_t n) {
  std::vector<RatVec> rows;
  rows.reserve(eqs.size());
  for (const auto& e : eqs) {
    RatVec r = e.coeffs;
    r.push_back(e.rhs);
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    RatVec& pr = rows[rank];
    const Rat inv = Rat(1) / pr[c];
    std::vector<std::size_t> nz;
    for (std::size_t k = c; k <= n; ++k) {
      if (!pr[k].is_zero()) {
        pr[k] *= inv;
        nz.push_back(k);
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rat f = rows[r][c];
      for (std::size_t k : nz) rows[r][k] -= f * pr[k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  AffineParam out;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][n].is_zero()) {
      out.consistent = false;
      return out;
    }
  }
  out.origin.assign(n, Rat(0));
  std::vector<char> is_pivot(n, 0);
  for (std::size_t r = 0; r < rank; ++r) {
    out.origin[pivot_col[r]] = rows[r][n];
    is_pivot[pivot_col[r]] = 1;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(n);
    v[f] = Rat(1);
    for (std::size_t r = 0; r < rank; ++r) {
      if (!rows[r][f].is_zero()) v[pivot_col[r]] = -rows[r][f];
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const Rat f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < n; ++k) {
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      }
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Simplex over the reduced inequality system  G y <= h,  y free.

namespace {

struct ReducedRow {
  const RatVec* g;
  const Rat* h;
};

struct SimplexOutcome {
  LpStatus status = LpStatus::Infeasible;
  RatVec y;
  Rat value;      // objective value in y-space
  RatVec duals;   // one per row, >= 0
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_(rows * (cols + 1)), basis_(rows, 0), d_(cols + 1) {}

  Rat& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return t_[r * (n_ + 1) + c]; }
  Rat& rhs(std::size_t r) { return at(r, n_); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }
  RatVec& obj() { return d_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = Rat(1) / at(r, c);
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k <= n_; ++k) {
      Rat& v = at(r, k);
      if (v.is_zero()) continue;
      v *= inv;
      nz.push_back(k);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      if (at(i, c).is_zero()) continue;
      const Rat f = at(i, c);
      for (std::size_t k : nz) at(i, k) -= f * at(r, k);
    }
    if (!d_[c].is_zero()) {
      const Rat f = d_[c];
      for (std::size_t k : nz) d_[k] -= f * at(r, k);
    }
    basis_[r] = c;
  }

  /// Sets the objective row for maximising cost·z over the current basis.
  void set_objective(const RatVec& cost) {
    for (std::size_t j = 0; j < n_; ++j) d_[j] = -cost[j];
    d_[n_] = Rat(0);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rat f = d_[basis_[r]];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k <= n_; ++k) {
        if (!at(r, k).is_zero()) d_[k] -= f * at(r, k);
      }
    }
  }

  /// Bland's rule. Columns flagged in `forbidden` never enter.
  LpStatus run(const std::vector<char>& forbidden) {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!forbidden[j] && d_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return LpStatus::Optimal;
      std::size_t leave = m_;
      Rat best;
      for (std::size_t r = 0; r < m_; ++r) {
        const Rat& a = at(r, enter);
        if (a.sign() <= 0) continue;
        Rat ratio = at(r, n_) / a;
        if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Rat> t_;
  std::vector<std::size_t> basis_;
  RatVec d_;
};

/// Columns: y+ (d), y- (d), slack (m), artificial (one per row with h < 0).
SimplexOutcome run_simplex(const std::vector<ReducedRow>& rows, std::size_t d, const RatVec* objective) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> art_row;
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].h->sign() < 0) art_row.push_back(r);
  }
  const std::size_t slack0 = 2 * d;
  const std::size_t art0 = slack0 + m;
  const std::size_t ncols = art0 + art_row.size();
  Tableau tab(m, ncols);
  std::size_t next_art = art0;
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = rows[r].h->sign() < 0;
    const RatVec& g = *rows[r].g;
    for (std::size_t j = 0; j < d; ++j) {
      if (g[j].is_zero()) continue;
      tab.at(r, j) = flip ? -g[j] : g[j];
      tab.at(r, d + j) = flip ? g[j] : -g[j];
    }
    tab.at(r, slack0 + r) = Rat(flip ? -1 : 1);
    tab.rhs(r) = flip ? -*rows[r].h : *rows[r].h;
    if (flip) {
      tab.at(r, next_art) = Rat(1);
      tab.basis()[r] = next_art++;
    } else {
      tab.basis()[r] = slack0 + r;
    }
  }

  std::vector<char> forbidden(ncols, 0);
  SimplexOutcome out;
  if (!art_row.empty()) {
    RatVec cost(ncols);
    for (std::size_t j = art0; j < ncols; ++j) cost[j] = Rat(-1);
    tab.set_objective(cost);
    tab.run(forbidden);
    if (tab.obj()[ncols].sign() < 0) return out;  // infeasible
    for (std::size_t r = 0; r < m; ++r) {
      if (tab.basis()[r] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (!tab.at(r, j).is_zero()) {
          tab.pivot(r, j);
          break;
        }
      }
    }
    for (std::size_t j = art0; j < ncols; ++j) forbidden[j] = 1;
  }

  RatVec cost(ncols);
  if (objective) {
    for (std::size_t j = 0; j < d; ++j) {
      cost[j] = (*objective)[j];
      cost[d + j] = -(*objective)[j];
    }
  }
  tab.set_objective(cost);
  const LpStatus st = tab.run(forbidden);
  out.status = st;
  if (st == LpStatus::Unbounded) return out;

  out.y.assign(d, Rat(0));
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t b = tab.basis()[r];
    if (b < d) out.y[b] += tab.rhs(r);
    else if (b < 2 * d) out.y[b - d] -= tab.rhs(r);
  }
  out.value = tab.obj()[ncols];
  out.duals.assign(m, Rat(0));
  for (std::size_t r = 0; r < m; ++r) out.duals[r] = tab.obj()[slack0 + r];
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polyhedron

Polyhedron::Polyhedron(LinSystem sys) : source_(std::move(sys)) { reduce(); }

namespace {

/// Normalises g so its first nonzero entry is ±1. Returns the positive
/// factor applied, or nullopt when g is identically zero.
std::optional<Rat> normalise(RatVec& g, Rat& h) {
  auto it = std::find_if(g.begin(), g.end(), [](const Rat& v) { return !v.is_zero(); });
  if (it == g.end()) return std::nullopt;
  const Rat k = Rat(1) / it->abs();
  for (auto& v : g) {
    if (!v.is_zero()) v *= k;
  }
  h *= k;
  return k;
}

}  // namespace

void Polyhedron::reduce() {
  const std::size_t n = source_.size();
  AffineParam param = parametrize(source_.eqs, n);
  if (!param.consistent) {
    inconsistent_ = true;
    return;
  }
  origin_ = std::move(param.origin);
  basis_ = std::move(param.basis);
  add_eq_level(0);

  std::map<RatVec, std::size_t> seen;
  for (std::size_t i = 0; i < source_.ineqs.size(); ++i) {
    const auto& c = source_.ineqs[i];
    RatVec g(basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) g[j] = dot(c.coeffs, basis_[j]);
    Rat h = c.rhs - dot(c.coeffs, origin_);
    auto k = normalise(g, h);
    if (!k) {
      if (h.sign() < 0) inconsistent_ = true;
      continue;
    }
    auto [it, fresh] = seen.emplace(g, rows_.size());
    if (fresh) {
      rows_.push_back({std::move(g), std::move(h), i, *k});
    } else if (h < rows_[it->second].h) {
      rows_[it->second].h = std::move(h);
      rows_[it->second].source = i;
      rows_[it->second].scale = *k;
    }
  }
}

Polyhedron Polyhedron::restrict(const std::vector<LinConstraint>& extra_eqs,
                                const std::vector<LinConstraint>& extra_ineqs) const {
  Polyhedron p;
  p.source_ = source_;
  for (const auto& e : extra_eqs) p.source_.eqs.push_back(e);
  for (const auto& e : extra_ineqs) p.source_.ineqs.push_back(e);
  if (inconsistent_) {
    p.inconsistent_ = true;
    return p;
  }

  const std::size_t d = basis_.size();
  std::vector<LinConstraint> reduced_eqs;
  for (const auto& e : extra_eqs) {
    LinConstraint r{RatVec(d), e.rhs - dot(e.coeffs, origin_)};
    for (std::size_t j = 0; j < d; ++j) r.coeffs[j] = dot(e.coeffs, basis_[j]);
    reduced_eqs.push_back(std::move(r));
  }
  AffineParam sub = parametrize(reduced_eqs, d);
  if (!sub.consistent) {
    p.inconsistent_ = true;
    return p;
  }
  p.eq_levels_ = eq_levels_;
  p.add_eq_level(source_.eqs.size());
  // x = origin + basis (y0 + B2 z)
  p.origin_ = origin_;
  for (std::size_t j = 0; j < d; ++j) {
    if (sub.origin[j].is_zero()) continue;
    for (std::size_t k = 0; k < p.origin_.size(); ++k) {
      if (!basis_[j][k].is_zero()) p.origin_[k] += sub.origin[j] * basis_[j][k];
    }
  }
  for (const auto& b2 : sub.basis) {
    RatVec v(source_.size());
    for (std::size_t j = 0; j < d; ++j) {
      if (b2[j].is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!basis_[j][k].is_zero()) v[k] += b2[j] * basis_[j][k];
      }
    }
    p.basis_.push_back(std::move(v));
  }

  std::map<RatVec, std::size_t> seen;
  auto add_row = [&](RatVec g, Rat h, std::size_t source, const Rat& scale) {
    auto k = normalise(g, h);
    if (!k) {
      if (h.sign() < 0) p.inconsistent_ = true;
      return;
    }
    auto [it, fresh] = seen.emplace(g, p.rows_.size());
    if (fresh) {
      p.rows_.push_back({std::move(g), std::move(h), source, scale * *k});
    } else if (h < p.rows_[it->second].h) {
      p.rows_[it->second].h = std::move(h);
      p.rows_[it->second].source = source;
      p.rows_[it->second].scale = scale * *k;
    }
  };
  for (const auto& row : rows_) {
    RatVec g(sub.basis.size());
    for (std::size_t j = 0; j < sub.basis.size(); ++j) g[j] = dot(row.g, sub.basis[j]);
    add_row(std::move(g), row.h - dot(row.g, sub.origin), row.source, row.scale);
  }
  for (std::size_t i = 0; i < extra_ineqs.size(); ++i) {
    const auto& c = extra_ineqs[i];
    RatVec g(p.basis_.size());
    for (std::size_t j = 0; j < p.basis_.size(); ++j) g[j] = dot(c.coeffs, p.basis_[j]);
    add_row(std::move(g), c.rhs - dot(c.coeffs, p.origin_), source_.ineqs.size() + i, Rat(1));
  }
  return p;
}

RatVec Polyhedron::lift(const RatVec& y) const {
  RatVec x = origin_;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j].is_zero()) continue;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!basis_[j][k].is_zero()) x[k] += y[j] * basis_[j][k];
    }
  }
  return x;
}

RatVec Polyhedron::project_objective(const RatVec& c) const {
  RatVec out(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) out[j] = dot(c, basis_[j]);
  return out;
}

namespace {

using SparseCombo = std::vector<std::pair<std::size_t, Rat>>;

/// a -= f * b, both sorted by index.
void sub_scaled(SparseCombo& a, const Rat& f, const SparseCombo& b) {
  SparseCombo out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rat v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

struct Polyhedron::EqLevel {
  struct Row {
    RatVec v;
    std::size_t pivot;
    SparseCombo combo;  // over source equality indices
  };
  std::vector<Row> rows;
};

void Polyhedron::add_eq_level(std::size_t first_source) {
  auto level = std::make_shared<EqLevel>();
  for (std::size_t e = first_source; e < source_.eqs.size(); ++e) {
    RatVec v = source_.eqs[e].coeffs;
    SparseCombo combo{{e, Rat(1)}};
    auto reduce_by = [&](const EqLevel::Row& row) {
      if (v[row.pivot].is_zero()) return;
      const Rat f = v[row.pivot];
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!row.v[k].is_zero()) v[k] -= f * row.v[k];
      }
      sub_scaled(combo, f, row.combo);
    };
    for (const auto& lv : eq_levels_)
      for (const auto& row : lv->rows) reduce_by(row);
    for (const auto& row : level->rows) reduce_by(row);

    auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
    if (it == v.end()) continue;
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const Rat inv = Rat(1) / v[pivot];
    for (auto& x : v) {
      if (!x.is_zero()) x *= inv;
    }
    for (auto& [idx, c] : combo) c *= inv;
    for (auto& row : level->rows) {
      if (row.v[pivot].is_zero()) continue;
      const Rat f = row.v[pivot];
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) row.v[k] -= f * v[k];
      }
      sub_scaled(row.combo, f, combo);
    }
    level->rows.push_back({std::move(v), pivot, std::move(combo)});
  }
  eq_levels_.push_back(std::move(level));
}

RatVec Polyhedron::eq_multipliers(RatVec residual) const {
  RatVec mu(source_.eqs.size());
  for (const auto& lv : eq_levels_) {
    std::vector<Rat> coef;
    coef.reserve(lv->rows.size());
    for (const auto& row : lv->rows) coef.push_back(residual[row.pivot]);
    for (std::size_t r = 0; r < lv->rows.size(); ++r) {
      if (coef[r].is_zero()) continue;
      const auto& row = lv->rows[r];
      for (std::size_t k = 0; k < residual.size(); ++k) {
        if (!row.v[k].is_zero()) residual[k] -= coef[r] * row.v[k];
      }
      for (const auto& [idx, c] : row.combo) mu[idx] += coef[r] * c;
    }
  }
  for (const auto& x : residual) {
    if (!x.is_zero()) throw std::logic_error("dual reconstruction failed: residual not in equality span");
  }
  return mu;
}

namespace {


std::vector<ReducedRow> views(const auto& rows) {
  std::vector<ReducedRow> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back({&r.g, &r.h});
  return v;
}

}  // namespace

LpResult Polyhedron::maximize(const RatVec& objective, bool with_certificate) const {
  LpResult res;
  if (objective.size() != source_.size()) throw std::invalid_argument("objective length mismatch");
  if (inconsistent_) return res;
  const RatVec cy = project_objective(objective);
  SimplexOutcome out = run_simplex(views(rows_), basis_.size(), &cy);
  res.status = out.status;
  if (out.status != LpStatus::Optimal) return res;
  res.point = lift(out.y);
  res.value = dot(objective, res.point);

  if (with_certificate) {
    DualCertificate cert;
    cert.ineq_multipliers.assign(source_.ineqs.size(), Rat(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (out.duals[r].is_zero()) continue;
      cert.ineq_multipliers[rows_[r].source] += out.duals[r] * rows_[r].scale;
    }
    // Residual c - Σ λ_i a_i lies in the row space of the equalities.
    RatVec residual = objective;
    for (std::size_t i = 0; i < source_.ineqs.size(); ++i) {
      const Rat& l = cert.ineq_multipliers[i];
      if (l.is_zero()) continue;
      const RatVec& a = source_.ineqs[i].coeffs;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_zero()) residual[k] -= l * a[k];
      }
    }
    cert.eq_multipliers = eq_multipliers(std::move(residual));
    const std::size_t me = source_.eqs.size();
    Rat bound;
    for (std::size_t i = 0; i < source_.ineqs.size(); ++i) {
      if (!cert.ineq_multipliers[i].is_zero()) bound += cert.ineq_multipliers[i] * source_.ineqs[i].rhs;
    }
    for (std::size_t j = 0; j < me; ++j) {
      if (!cert.eq_multipliers[j].is_zero()) bound += cert.eq_multipliers[j] * source_.eqs[j].rhs;
    }
    if (bound != res.value) throw std::logic_error("dual bound differs from primal optimum");
    cert.bound = std::move(bound);
    res.certificate = std::move(cert);
  }
  return res;
}

LpResult Polyhedron::minimize(const RatVec& objective, bool with_certificate) const {
  RatVec neg(objective.size());
  for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  LpResult res = maximize(neg, with_certificate);
  res.value = -res.value;
  return res;
}

std::optional<RatVec> Polyhedron::feasible_point() const {
  if (inconsistent_) return std::nullopt;
  SimplexOutcome out = run_simplex(views(rows_), basis_.size(), nullptr);
  if (out.status != LpStatus::Optimal) return std::nullopt;
  return lift(out.y);
}

namespace {

/// Row indices of implicit equalities over the reduced system, plus the
/// distinct feasible points (in y-space) gathered while deciding them.
template <class Rows>
std::pair<std::vector<std::size_t>, std::vector<RatVec>> find_implicit(const Rows& rows, std::size_t d) {
  const auto vs = views(rows);
  SimplexOutcome first = run_simplex(vs, d, nullptr);
  if (first.status != LpStatus::Optimal) return {};
  std::vector<RatVec> points{first.y};
  auto slack_positive = [&](std::size_t r, const RatVec& y) {
    return dot(rows[r].g, y) < rows[r].h;
  };
  std::vector<std::size_t> implicit;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool slack = false;
    for (const auto& y : points) {
      if (slack_positive(r, y)) {
        slack = true;
        break;
      }
    }
    if (slack) continue;
    RatVec neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -rows[r].g[j];
    SimplexOutcome out = run_simplex(vs, d, &neg);
    if (out.status == LpStatus::Unbounded) {
      // Slack is unbounded; cap it at 1 to get a concrete point.
      const Rat cap = Rat(1) - rows[r].h;
      auto capped = vs;
      capped.push_back({&neg, &cap});
      out = run_simplex(capped, d, &neg);
    }
    if (out.status == LpStatus::Optimal && slack_positive(r, out.y)) {
      points.push_back(std::move(out.y));
    } else {
      implicit.push_back(r);
    }
  }
  return {implicit, points};
}

}  // namespace

std::vector<std::size_t> Polyhedron::implicit_equalities() const {
  if (inconsistent_) return {};
  auto [rows, points] = find_implicit(rows_, basis_.size());
  std::vector<std::size_t> out;
  for (std::size_t r : rows) out.push_back(rows_[r].source);
  std::sort(out.begin(), out.end());
  return out;
}

PolyInfo Polyhedron::info() const {
  PolyInfo info;
  if (inconsistent_) return info;
  const std::size_t d = basis_.size();
  auto [implicit, points] = find_implicit(rows_, d);
  if (points.empty()) return info;
  std::vector<RatVec> tight;
  for (std::size_t r : implicit) tight.push_back(rows_[r].g);
  info.dim = static_cast<int>(d - rank(std::move(tight)));
  info.status = info.dim == 0 ? PolyStatus::Point : PolyStatus::PositiveDimensional;
  // The average of the gathered points has positive slack in every
  // non-implicit row, so it lies in the relative interior.
  RatVec avg(d);
  for (const auto& y : points) {
    for (std::size_t j = 0; j < d; ++j) avg[j] += y[j];
  }
  const Rat inv = Rat(1) / Rat(static_cast<long>(points.size()));
  for (auto& v : avg) v *= inv;
  info.witness = lift(avg);
  return info;
}

PolyInfo solve(const LinSystem& sys) { return Polyhedron(sys).info(); }

// ---------------------------------------------------------------------------
// Vertex enumeration by the double description method.

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto v : w_) c += static_cast<std::size_t>(std::popcount(v));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  RatVec v;
  Bits zeros;
};

void normalise_ray(RatVec& v) {
  Rat k;
  if (!v[0].is_zero()) {
    k = v[0];
  } else {
    auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
    if (it == v.end()) return;
    k = it->abs();
  }
  const Rat inv = Rat(1) / k;
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
}

/// Extreme rays of {z : A z >= 0} for a pointed cone; A has full column rank.
std::vector<RatVec> extreme_rays(const std::vector<RatVec>& a) {
  const std::size_t m = a.size();
  const std::size_t dim = a.front().size();

  // Pick `dim` independent rows greedily, in order.
  std::vector<std::size_t> chosen;
  std::vector<RatVec> echelon;
  std::vector<std::size_t> echelon_pivot;
  for (std::size_t i = 0; i < m && chosen.size() < dim; ++i) {
    RatVec v = a[i];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const std::size_t p = echelon_pivot[e];
      if (v[p].is_zero()) continue;
      const Rat f = v[p] / echelon[e][p];
      for (std::size_t k = 0; k < dim; ++k) {
        if (!echelon[e][k].is_zero()) v[k] -= f * echelon[e][k];
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
    if (it == v.end()) continue;
    echelon_pivot.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    chosen.push_back(i);
  }
  if (chosen.size() < dim) throw Unbounded("polyhedron has a lineality space");

  // Columns of the inverse of the chosen square submatrix.
  std::vector<RatVec> aug(dim, RatVec(2 * dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) aug[r][c] = a[chosen[r]][c];
    aug[r][dim + r] = Rat(1);
  }
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    while (aug[p][c].is_zero()) ++p;
    std::swap(aug[p], aug[c]);
    const Rat inv = Rat(1) / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      const Rat f = aug[r][c];
      for (std::size_t k = 0; k < 2 * dim; ++k) {
        if (!aug[c][k].is_zero()) aug[r][k] -= f * aug[c][k];
      }
    }
  }

  std::vector<char> processed(m, 0);
  for (std::size_t i : chosen) processed[i] = 1;
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    Ray ray{RatVec(dim), Bits(m)};
    for (std::size_t r = 0; r < dim; ++r) ray.v[r] = aug[r][dim + k];
    for (std::size_t r = 0; r < dim; ++r) {
      if (r != k) ray.zeros.set(chosen[r]);
    }
    normalise_ray(ray.v);
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = 1;
    std::vector<Rat> s(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(a[i], rays[k].v);
      const int sg = s[k].sign();
      (sg > 0 ? pos : (sg < 0 ? neg : zero)).push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k : zero) rays[k].zeros.set(i);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        Bits common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
          if (q != p && q != n && common.subset_of(rays[q].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{RatVec(dim), common};
        for (std::size_t k = 0; k < dim; ++k) r.v[k] = s[p] * rays[n].v[k] - s[n] * rays[p].v[k];
        normalise_ray(r.v);
        r.zeros.set(i);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t k : pos) next.push_back(std::move(rays[k]));
    for (std::size_t k : zero) {
      rays[k].zeros.set(i);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }

  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace

std::vector<RatVec> Polyhedron::vertices() const {
  if (inconsistent_ || !feasible_point()) return {};
  std::vector<LinConstraint> tight;
  for (std::size_t i : implicit_equalities()) tight.push_back(source_.ineqs[i]);
  const Polyhedron full = restrict(tight, {});
  const std::size_t d = full.basis_.size();
  if (d == 0) return {full.origin_};

  // Homogenise: (t, y) with t >= 0 and h t - g y >= 0 for every row.
  std::vector<RatVec> cone;
  RatVec t_row(d + 1);
  t_row[0] = Rat(1);
  cone.push_back(std::move(t_row));
  for (const auto& row : full.rows_) {
    RatVec r(d + 1);
    r[0] = row.h;
    for (std::size_t j = 0; j < d; ++j) r[j + 1] = -row.g[j];
    cone.push_back(std::move(r));
  }
  std::vector<RatVec> out;
  for (auto& ray : extreme_rays(cone)) {
    if (ray[0].sign() <= 0) throw Unbounded("polyhedron is unbounded");
    RatVec y(ray.begin() + 1, ray.end());
    out.push_back(full.lift(y));
  }
  return out;
}

bool verify_certificate(const LinSystem& sys, const RatVec& objective, const DualCertificate& cert) {
  if (cert.ineq_multipliers.size() != sys.ineqs.size() || cert.eq_multipliers.size() != sys.eqs.size() ||
      objective.size() != sys.size()) {
    return false;
  }
  for (const auto& l : cert.ineq_multipliers) {
    if (l.sign() < 0) return false;
  }
  RatVec combo(sys.size());
  Rat bound;
  auto accumulate = [&](const std::vector<LinConstraint>& rows, const RatVec& mult) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (mult[i].is_zero()) continue;
      for (std::size_t k = 0; k < combo.size(); ++k) {
        if (!rows[i].coeffs[k].is_zero()) combo[k] += mult[i] * rows[i].coeffs[k];
      }
      bound += mult[i] * rows[i].rhs;
    }
  };
  accumulate(sys.ineqs, cert.ineq_multipliers);
  accumulate(sys.eqs, cert.eq_multipliers);
  return combo == objective && bound == cert.bound;
}

ImpliedResult certify_implied(const Polyhedron& poly, const LinConstraint& target) {
  ImpliedResult res;
  LpResult lp = poly.maximize(target.coeffs, true);
  if (lp.status == LpStatus::Unbounded) throw Unbounded("target is unbounded over the system");
  if (lp.status == LpStatus::Infeasible) {
    res.implied = true;
    res.vacuous = true;
    return res;
  }
  res.max_value = lp.value;
  res.implied = lp.value <= target.rhs;
  res.point = std::move(lp.point);
  res.certificate = std::move(lp.certificate);
  return res;
}

ImpliedResult certify_implied(const LinSystem& sys, const LinConstraint& target) {
  return certify_implied(Polyhedron(sys), target);
}

VertexList enumerate_vertices(const LinSystem& sys, std::size_t cap) {
  VertexList result;
  std::vector<RatVec> vertices = Polyhedron(sys).vertices();
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > cap) {
    vertices.resize(cap);
    result.cap_exceeded = true;
  }
  result.vertices = std::move(vertices);
  return result;
}

}  // namespace omlprob
