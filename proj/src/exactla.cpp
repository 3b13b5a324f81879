#include "dijlat/exactla.hpp"

#include <numeric>
#include <stdexcept>

namespace dijlat {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Clear denominators row by row; preserves row space and rank.
IntMat integerize_rows(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int mult = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mult = lcm(mult, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * mult;
      r(i, j) = v.get_num();
    }
  }
  return r;
}

// Fraction-free (Bareiss) forward elimination with full pivoting.
// Returns the rank; on exit m is upper triangular in the permuted order,
// with row i zeroed below pivot columns. col_perm records column swaps.
std::size_t bareiss(IntMat& m, std::vector<std::size_t>* col_perm) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);
  Int prev = 1;
  std::size_t r = 0;
  while (r < nr && r < nc) {
    std::size_t pi = nr, pj = nc;
    for (std::size_t j = r; j < nc && pj == nc; ++j)
      for (std::size_t i = r; i < nr; ++i)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pj == nc) break;
    m.swap_rows(r, pi);
    m.swap_cols(r, pj);
    std::swap(perm[r], perm[pj]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = r + 1; j < nc; ++j) {
        Int t = m(i, j) * m(r, r) - m(i, r) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, r) = 0;
    }
    prev = m(r, r);
    ++r;
  }
  if (col_perm) *col_perm = perm;
  return r;
}

}  // namespace

std::size_t rank(const IntMat& m) {
  IntMat w = m;
  return bareiss(w, nullptr);
}

std::size_t rank(const RatMat& m) {
  IntMat w = integerize_rows(m);
  return bareiss(w, nullptr);
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  const std::size_t nr = a.rows(), nc = a.cols();
  // augmented, row-wise integerized
  RatMat aug(nr, nc + 1);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) aug(i, j) = a(i, j);
    aug(i, nc) = b[i];
  }
  IntMat m = integerize_rows(aug);

  // Bareiss elimination pivoting only within the first nc columns.
  std::vector<std::size_t> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);
  Int prev = 1;
  std::size_t r = 0;
  while (r < nr && r < nc) {
    std::size_t pi = nr, pj = nc;
    for (std::size_t j = r; j < nc && pj == nc; ++j)
      for (std::size_t i = r; i < nr; ++i)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pj == nc) break;
    m.swap_rows(r, pi);
    m.swap_cols(r, pj);
    std::swap(perm[r], perm[pj]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = r + 1; j <= nc; ++j) {
        Int t = m(i, j) * m(r, r) - m(i, r) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, r) = 0;
    }
    prev = m(r, r);
    ++r;
  }
  for (std::size_t i = r; i < nr; ++i)
    if (m(i, nc) != 0) return std::nullopt;  // 0 = nonzero row

  RatVec x(nc, Rat(0));
  for (std::size_t k = r; k-- > 0;) {
    Rat acc(m(k, nc));
    for (std::size_t j = k + 1; j < nc; ++j) {
      if (m(k, j) != 0) acc -= Rat(m(k, j)) * x[perm[j]];
    }
    x[perm[k]] = acc / Rat(m(k, k));
  }
  return x;
}

HnfResult hnf(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.rows());
  const std::size_t nr = h.rows(), nc = h.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < nc && r < nr; ++j) {
    // Euclid down the column until a single nonzero entry remains at row r.
    while (true) {
      std::size_t best = nr;
      for (std::size_t i = r; i < nr; ++i) {
        if (h(i, j) == 0) continue;
        if (best == nr || abs_int(h(i, j)) < abs_int(h(best, j))) best = i;
      }
      if (best == nr) break;  // empty column below r
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (h(i, j) == 0) continue;
        Int q = floor_div(h(i, j), h(r, j));
        if (q != 0) {
          h.submul_row(i, r, q);
          u.submul_row(i, r, q);
        }
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, j), h(r, j));
      if (q != 0) {
        h.submul_row(i, r, q);
        u.submul_row(i, r, q);
      }
    }
    ++r;
  }
  return {h, u};
}

SnfResult snf(const IntMat& m) {
  IntMat s = m;
  const std::size_t nr = s.rows(), nc = s.cols();
  IntMat U = IntMat::identity(nr);
  IntMat V = IntMat::identity(nc);
  std::size_t t = 0;
  while (t < nr && t < nc) {
    // smallest-magnitude nonzero in the trailing submatrix
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (s(i, j) == 0) continue;
        if (pi == nr || abs_int(s(i, j)) < abs_int(s(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == nr) break;
    s.swap_rows(t, pi);
    U.swap_rows(t, pi);
    s.swap_cols(t, pj);
    V.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (s(i, t) == 0) continue;
        Int q = floor_div(s(i, t), s(t, t));
        if (q != 0) {
          s.submul_row(i, t, q);
          U.submul_row(i, t, q);
        }
        if (s(i, t) != 0) {  // remainder smaller than pivot: promote it
          s.swap_rows(t, i);
          U.swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (s(t, j) == 0) continue;
        Int q = floor_div(s(t, j), s(t, t));
        if (q != 0) {
          s.submul_col(j, t, q);
          V.submul_col(j, t, q);
        }
        if (s(t, j) != 0) {
          s.swap_cols(t, j);
          V.swap_cols(t, j);
          dirty = true;
        }
      }
    }

    // pivot must divide the rest of the submatrix
    bool divides = true;
    for (std::size_t i = t + 1; i < nr && divides; ++i)
      for (std::size_t j = t + 1; j < nc && divides; ++j)
        if (s(i, j) % s(t, t) != 0) {
          // fold the offending row into row t and redo this pivot
          for (std::size_t k = 0; k < nc; ++k) s(t, k) += s(i, k);
          for (std::size_t k = 0; k < nr; ++k) U(t, k) += U(i, k);
          divides = false;
        }
    if (!divides) continue;
    if (s(t, t) < 0) {
      s.negate_row(t);
      U.negate_row(t);
    }
    ++t;
  }
  std::vector<Int> diag;
  for (std::size_t i = 0; i < std::min(nr, nc); ++i)
    if (s(i, i) != 0) diag.push_back(s(i, i));
  return {diag, U, V};
}

IntMat integer_kernel(const IntMat& m) {
  const std::size_t n = m.cols();
  HnfResult h = hnf(m.transposed());  // h.u is n x n, h.h = u * m^T
  std::size_t rk = 0;
  for (std::size_t i = 0; i < h.h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < h.h.cols(); ++j)
      if (h.h(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  IntMat k(n - rk, n);
  for (std::size_t i = rk; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - rk, j) = h.u(i, j);
  return k;
}

RatMat null_space(const RatMat& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  RatMat w = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < nc && r < nr; ++j) {
    std::size_t pi = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (w(i, j) != 0) {
        pi = i;
        break;
      }
    if (pi == nr) continue;
    w.swap_rows(r, pi);
    Rat inv = Rat(1) / w(r, j);
    for (std::size_t k = 0; k < nc; ++k) w(r, k) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || w(i, j) == 0) continue;
      Rat f = w(i, j);
      for (std::size_t k = 0; k < nc; ++k) w(i, k) -= f * w(r, k);
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<bool> is_pivot(nc, false);
  for (auto j : pivot_col) is_pivot[j] = true;
  RatMat basis(nc - r, nc);
  std::size_t out = 0;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    basis(out, f) = Rat(1);
    for (std::size_t k = 0; k < r; ++k) basis(out, pivot_col[k]) = -w(k, f);
    ++out;
  }
  return basis;
}

IntMat saturate(const RatMat& span) {
  const std::size_t n = span.cols();
  RatMat ker = null_space(span);
  // scale each kernel row to a primitive integer vector
  IntMat nmat(ker.rows(), n);
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Int mult = 1;
    for (std::size_t j = 0; j < n; ++j) mult = lcm(mult, ker(i, j).get_den());
    Int g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = ker(i, j) * mult;
      nmat(i, j) = v.get_num();
      g = gcd(g, nmat(i, j));
    }
    if (g > 1)
      for (std::size_t j = 0; j < n; ++j)
        mpz_divexact(nmat(i, j).get_mpz_t(), nmat(i, j).get_mpz_t(), g.get_mpz_t());
  }
  return integer_kernel(nmat);
}

std::optional<Int> sublattice_index(const IntMat& gen, const IntMat& ambient) {
  if (gen.cols() != ambient.cols()) throw std::invalid_argument("sublattice_index: width mismatch");
  HnfResult hr = hnf(ambient);
  std::size_t ra = 0;
  for (std::size_t i = 0; i < hr.h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h(i, j) != 0) nonzero = true;
    if (nonzero) ++ra;
  }
  IntMat basis(ra, ambient.cols());
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ambient.cols(); ++j) basis(i, j) = hr.h(i, j);

  // express each gen row in the ambient basis
  RatMat bt = to_rat(basis.transposed());
  IntMat coeff(gen.rows(), ra);
  for (std::size_t i = 0; i < gen.rows(); ++i) {
    RatVec rhs(gen.cols());
    for (std::size_t j = 0; j < gen.cols(); ++j) rhs[j] = Rat(gen(i, j));
    auto sol = solve_linear(bt, rhs);
    if (!sol) throw std::invalid_argument("sublattice_index: gen row outside rational span of ambient");
    for (std::size_t k = 0; k < ra; ++k) {
      if (!is_integer((*sol)[k]))
        throw std::invalid_argument("sublattice_index: gen row outside ambient lattice");
      coeff(i, k) = (*sol)[k].get_num();
    }
  }
  if (rank(coeff) < ra) return std::nullopt;
  SnfResult s = snf(coeff);
  Int idx = 1;
  for (const auto& d : s.diag) idx *= d;
  return idx;
}

}  // namespace dijlat
