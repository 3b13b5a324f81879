#pragma once

#include <optional>

#include "dijlat/matrix.hpp"

namespace dijlat {

/// Smith normal form: leftU * m * rightV equals the diagonal matrix with
/// the elementary divisors of m on the diagonal (extended by zeros).
/// Both transforms are unimodular and diag[i] divides diag[i+1].
struct SnfResult {
  std::vector<Int> diag;  // nonnegative, divisibility chain
  IntMat leftU;
  IntMat rightV;
};

/// Row-style Hermite normal form: h = u * m with u unimodular, h in
/// echelon form with positive pivots and entries above each pivot
/// reduced into [0, pivot). Canonical for a given row lattice.
struct HnfResult {
  IntMat h;
  IntMat u;
};

std::size_t rank(const IntMat& m);
std::size_t rank(const RatMat& m);

/// Some solution of a*x = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero; fraction-free forward elimination.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

HnfResult hnf(const IntMat& m);

SnfResult snf(const IntMat& m);

/// Integral basis (as rows) of { x in Z^n : m * x = 0 }.
IntMat integer_kernel(const IntMat& m);

/// Rows spanning the rational kernel { x : m * x = 0 }; canonical
/// reduced-echelon construction, one row per free column.
RatMat null_space(const RatMat& m);

/// Integral lattice basis (rows) of lin(rows of span) intersected with Z^n.
IntMat saturate(const RatMat& span);

/// Index of lat(rows of gen) inside lat(rows of ambient): nullopt when the
/// ranks differ (infinite index), otherwise the product of the elementary
/// divisors of the coefficient matrix expressing gen in a lattice basis of
/// ambient. Throws if a row of gen lies outside lat(ambient).
std::optional<Int> sublattice_index(const IntMat& gen, const IntMat& ambient);

}  // namespace dijlat
