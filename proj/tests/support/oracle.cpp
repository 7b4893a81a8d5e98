#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rat inv = Rat(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rat f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<RatVec> solve_square(const Matrix& a, const RatVec& b) {
  const std::size_t n = a.size();
  Matrix aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  const auto piv = rref(aug);
  if (piv.size() != n || (n > 0 && piv.back() == n)) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  return r > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(r + 0.5L);
}

}  // namespace

VertexOracle brute_vertices(const omlprob::LinSystem& sys, std::uint64_t max_subsets) {
  VertexOracle out;
  const std::size_t n = sys.size();

  Matrix eq;
  for (const auto& e : sys.eqs) {
    RatVec row = e.coeffs;
    row.push_back(e.rhs);
    eq.push_back(std::move(row));
  }
  const auto piv = rref(eq);
  if (!piv.empty() && piv.back() == n) {
    out.empty = true;
    return out;
  }
  RatVec x0(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    x0[piv[r]] = eq[r][n];
    is_pivot[piv[r]] = true;
  }
  std::vector<RatVec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    RatVec v(n);
    v[j] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -eq[r][j];
    basis.push_back(std::move(v));
  }
  const std::size_t k = basis.size();

  std::map<RatVec, Rat> rows;
  for (const auto& ineq : sys.ineqs) {
    RatVec g(k);
    for (std::size_t j = 0; j < k; ++j) g[j] = dot(ineq.coeffs, basis[j]);
    Rat h = ineq.rhs - dot(ineq.coeffs, x0);
    auto lead = std::find_if(g.begin(), g.end(), [](const Rat& v) { return !v.is_zero(); });
    if (lead == g.end()) {
      if (h.sign() < 0) {
        out.empty = true;
        return out;
      }
      continue;
    }
    const Rat s = lead->abs();
    for (auto& v : g) v /= s;
    h /= s;
    auto [it, inserted] = rows.emplace(g, h);
    if (!inserted && h < it->second) it->second = h;
  }
  Matrix g;
  RatVec h;
  for (const auto& [gi, hi] : rows) {
    g.push_back(gi);
    h.push_back(hi);
  }

  auto lift = [&](const RatVec& y) {
    RatVec x = x0;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) x[i] += y[j] * basis[j][i];
    return x;
  };
  auto feasible = [&](const RatVec& y) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (dot(g[i], y) > h[i]) return false;
    return true;
  };

  std::set<RatVec> found;
  if (k == 0) {
    if (feasible(RatVec{})) found.insert(x0);
  } else if (g.size() >= k) {
    if (choose(g.size(), k) > max_subsets) throw std::length_error("brute_vertices: too many subsets");
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Matrix a;
      RatVec b;
      for (auto i : idx) {
        a.push_back(g[i]);
        b.push_back(h[i]);
      }
      if (auto y = solve_square(a, b); y && feasible(*y)) found.insert(lift(*y));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == g.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  out.vertices.assign(found.begin(), found.end());
  out.empty = out.vertices.empty();
  out.dim = hull_dim(out.vertices);
  return out;
}

int hull_dim(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVec d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(oracle::rank(std::move(diffs)));
}

std::uint32_t boolean_mask(const std::string& name, std::size_t n_atoms) {
  if (name == "0") return 0;
  if (name == "1") return (1u << n_atoms) - 1;
  std::uint32_t mask = 0;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.size() < 2 || part[0] != 'a') throw std::invalid_argument("not an atom join: " + name);
    mask |= 1u << (std::stoul(part.substr(1)) - 1);
  }
  return mask;
}

bool isomorphic(const Oml& x, const Oml& y) {
  const std::size_t n = x.size();
  if (n != y.size()) return false;
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[x.bot()] != y.bot() || perm[x.top()] != y.top()) continue;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      ok = perm[x.ocomp(a)] == y.ocomp(perm[a]);
      for (Elem b = 0; b < n && ok; ++b) ok = x.leq(a, b) == y.leq(perm[a], perm[b]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

bool perp(const Oml& l, Elem a, Elem b) { return l.leq(a, l.ocomp(b)); }

bool in_range(const omlprob::BiMap& m) {
  for (const auto& v : m.values())
    if (v.sign() < 0 || v > Rat(1)) return false;
  return true;
}

/// Third-axiom check with correction term k(c) for rows and k'(c) for columns.
template <class Row, class Col>
bool third_axiom(const omlprob::BiMap& m, Row row_corr, Col col_corr) {
  const Oml& l = m.lattice();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) {
      if (!perp(l, a, b)) continue;
      const Elem j = l.join(a, b);
      for (Elem c = 0; c < l.size(); ++c) {
        if (m(j, c) != m(a, c) + m(b, c) - row_corr(c)) return false;
        if (m(c, j) != m(c, a) + m(c, b) - col_corr(c)) return false;
      }
    }
  return true;
}

}  // namespace

bool is_s_map(const omlprob::BiMap& p) {
  const Oml& l = p.lattice();
  if (!in_range(p) || p(l.top(), l.top()) != Rat(1)) return false;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (perp(l, a, b) && !p(a, b).is_zero()) return false;
  auto zero = [](Elem) { return Rat(0); };
  return third_axiom(p, zero, zero);
}

bool is_j_map(const omlprob::BiMap& q) {
  const Oml& l = q.lattice();
  if (!in_range(q) || !q(l.bot(), l.bot()).is_zero() || q(l.top(), l.top()) != Rat(1)) return false;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (perp(l, a, b) && q(a, b) != q(a, a) + q(b, b)) return false;
  auto diag = [&](Elem c) { return q(c, c); };
  return third_axiom(q, diag, diag);
}

bool is_d_map(const omlprob::BiMap& d) {
  const Oml& l = d.lattice();
  const Elem o = l.bot();
  if (!in_range(d) || d(l.top(), o) != Rat(1) || d(o, l.top()) != Rat(1)) return false;
  for (Elem a = 0; a < l.size(); ++a) {
    if (!d(a, a).is_zero()) return false;
    for (Elem b = 0; b < l.size(); ++b)
      if (perp(l, a, b) && d(a, b) != d(a, o) + d(o, b)) return false;
  }
  return third_axiom(d, [&](Elem c) { return d(o, c); }, [&](Elem c) { return d(c, o); });
}

bool is_g_map(const omlprob::BiMap& g) {
  const Oml& l = g.lattice();
  const Elem o = l.bot();
  if (!in_range(g)) return false;
  for (Elem a : {l.bot(), l.top()})
    for (Elem b : {l.bot(), l.top()})
      if (g(a, b) != Rat(0) && g(a, b) != Rat(1)) return false;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (perp(l, a, b) && g(a, b) != g(a, o) + g(o, b) - g(o, o)) return false;
  return third_axiom(g, [&](Elem c) { return g(o, c); }, [&](Elem c) { return g(c, o); });
}

bool is_state(const Oml& l, const RatVec& m) {
  if (m.size() != l.size()) return false;
  for (const auto& v : m)
    if (v.sign() < 0 || v > Rat(1)) return false;
  if (m[l.top()] != Rat(1)) return false;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (perp(l, a, b) && m[l.join(a, b)] != m[a] + m[b]) return false;
  return true;
}

RatVec mix(const RatVec& x, const RatVec& y, const Rat& t) {
  RatVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = t * x[i] + (Rat(1) - t) * y[i];
  return out;
}

}  // namespace oracle
