#include "dijlat/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace dijlat {

namespace {

// Dense tableau simplex in standard equality form:
//   min cost^T v  s.t.  T v = rhs, v >= 0
// with one artificial column per row forming the initial basis.
struct Tableau {
  std::size_t m;           // rows
  std::size_t n;           // structural columns (artificials follow)
  RatMat t;                // m x (n + m + 1), last column = rhs
  std::vector<std::size_t> basis;  // basis[r] = column index
  RatVec z;                // maintained negated reduced costs, length n + m
  RatVec cost;             // current objective coefficients, length n + m

  std::size_t art(std::size_t r) const { return n + r; }
  std::size_t width() const { return n + m; }

  void pivot(std::size_t r, std::size_t j) {
    Rat p = t(r, j);
    for (std::size_t k = 0; k <= width(); ++k) t(r, k) /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t(i, j) == 0) continue;
      Rat f = t(i, j);
      for (std::size_t k = 0; k <= width(); ++k) t(i, k) -= f * t(r, k);
    }
    Rat zf = z[j];
    if (zf != 0)
      for (std::size_t k = 0; k < width(); ++k) z[k] -= zf * t(r, k);
    basis[r] = j;
  }

  void recompute_z() {
    // z_j = cB^T B^{-1} A_j - c_j
    z.assign(width(), Rat(0));
    for (std::size_t j = 0; j < width(); ++j) {
      Rat acc(0);
      for (std::size_t r = 0; r < m; ++r)
        if (cost[basis[r]] != 0) acc += cost[basis[r]] * t(r, j);
      z[j] = acc - cost[j];
    }
  }

  // Bland: entering = smallest column with z > 0 among allowed; leaving =
  // smallest ratio, ties broken by smallest basis variable index.
  // Returns false when optimal, throws Unbounded via status flag.
  enum class Step { Optimal, Pivoted, Unbounded };
  Step step(bool allow_artificials) {
    std::size_t enter = width();
    for (std::size_t j = 0; j < width(); ++j) {
      if (!allow_artificials && j >= n) break;
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width()) return Step::Optimal;
    std::size_t leave = m;
    Rat best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, enter) <= 0) continue;
      Rat ratio = t(r, width()) / t(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) return Step::Unbounded;
    pivot(leave, enter);
    return Step::Pivoted;
  }
};

}  // namespace

LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c,
                  const std::vector<Relation>& rel, Sense sense,
                  const std::vector<VarBound>& bounds) {
  const std::size_t m = a.rows();
  const std::size_t nvars = a.cols();
  if (b.size() != m || rel.size() != m || c.size() != nvars || bounds.size() != nvars)
    throw std::invalid_argument("lp_solve: shape mismatch");

  // Column layout: per variable, one column (nonnegative) or a +/- pair
  // (free); then one slack per inequality row.
  std::vector<std::size_t> var_col(nvars);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    var_col[j] = ncols;
    ncols += bounds[j] == VarBound::Free ? 2 : 1;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (rel[i] != Relation::EQ) slack_col[i] = ncols++;

  Tableau tab;
  tab.m = m;
  tab.n = ncols;
  tab.t = RatMat(m, ncols + m + 1);
  tab.basis.resize(m);
  std::vector<int> row_sign(m, 1);

  for (std::size_t i = 0; i < m; ++i) {
    Rat rhs = b[i];
    int sgn = rhs < 0 ? -1 : 1;
    row_sign[i] = sgn;
    for (std::size_t j = 0; j < nvars; ++j) {
      Rat v = a(i, j) * sgn;
      tab.t(i, var_col[j]) = v;
      if (bounds[j] == VarBound::Free) tab.t(i, var_col[j] + 1) = -v;
    }
    if (slack_col[i] != SIZE_MAX)
      tab.t(i, slack_col[i]) = Rat(rel[i] == Relation::LE ? 1 : -1) * sgn;
    tab.t(i, tab.art(i)) = Rat(1);
    tab.t(i, tab.width()) = rhs * sgn;
    tab.basis[i] = tab.art(i);
  }

  // Phase 1: minimize sum of artificials.
  tab.cost.assign(tab.width(), Rat(0));
  for (std::size_t i = 0; i < m; ++i) tab.cost[tab.art(i)] = Rat(1);
  tab.recompute_z();
  while (true) {
    auto s = tab.step(true);
    if (s == Tableau::Step::Optimal) break;
    if (s == Tableau::Step::Unbounded)
      throw std::logic_error("lp_solve: phase-1 unbounded");  // cannot happen, cost >= 0
  }
  Rat infeas(0);
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] >= tab.n) infeas += tab.t(r, tab.width());
  if (infeas != 0) {
    LpResult res;
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive remaining zero-valued artificials out of the basis when possible;
  // rows where none of the structural columns pivot are redundant and keep
  // their artificial at value zero.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < tab.n) continue;
    for (std::size_t j = 0; j < tab.n; ++j)
      if (tab.t(r, j) != 0) {
        tab.pivot(r, j);
        break;
      }
  }

  // Phase 2: real objective (internally always minimize).
  tab.cost.assign(tab.width(), Rat(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    Rat cj = sense == Sense::Maximize ? -c[j] : c[j];
    tab.cost[var_col[j]] = cj;
    if (bounds[j] == VarBound::Free) tab.cost[var_col[j] + 1] = -cj;
  }
  tab.recompute_z();
  while (true) {
    auto s = tab.step(false);
    if (s == Tableau::Step::Optimal) break;
    if (s == Tableau::Step::Unbounded) {
      LpResult res;
      res.status = LpStatus::Unbounded;
      return res;
    }
  }

  LpResult res;
  res.status = LpStatus::Optimal;
  res.primal.assign(nvars, Rat(0));
  RatVec colval(tab.width(), Rat(0));
  for (std::size_t r = 0; r < m; ++r) colval[tab.basis[r]] = tab.t(r, tab.width());
  for (std::size_t j = 0; j < nvars; ++j) {
    res.primal[j] = colval[var_col[j]];
    if (bounds[j] == VarBound::Free) res.primal[j] -= colval[var_col[j] + 1];
  }
  res.objective = Rat(0);
  for (std::size_t j = 0; j < nvars; ++j) res.objective += c[j] * res.primal[j];

  // Duals via the artificial columns: B^{-1} e_i is the tableau column of
  // artificial i, so y_i = cB^T (tableau column of artificial i).
  res.dual.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rat y(0);
    for (std::size_t r = 0; r < m; ++r)
      if (tab.cost[tab.basis[r]] != 0) y += tab.cost[tab.basis[r]] * tab.t(r, tab.art(i));
    y *= row_sign[i];
    if (sense == Sense::Maximize) y = -y;
    res.dual[i] = y;
  }

  // strong duality, exact
  Rat dual_obj(0);
  for (std::size_t i = 0; i < m; ++i) dual_obj += res.dual[i] * b[i];
  assert(dual_obj == res.objective);

  return res;
}

LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c,
                  const std::vector<Relation>& rel, Sense sense) {
  return lp_solve(a, b, c, rel, sense, std::vector<VarBound>(a.cols(), VarBound::NonNegative));
}

}  // namespace dijlat
