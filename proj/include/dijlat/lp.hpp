#pragma once

#include <vector>

#include "dijlat/matrix.hpp"

namespace dijlat {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Relation { LE, EQ, GE };
enum class Sense { Minimize, Maximize };
enum class VarBound { NonNegative, Free };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVec primal;  // per original variable, only for Optimal
  RatVec dual;    // per original row, only for Optimal
  Rat objective;  // only for Optimal

  bool optimal() const { return status == LpStatus::Optimal; }
};

/// Exact rational simplex over the rows a x (rel) b, objective c, variable
/// bounds as given (free variables are split internally). Bland's pivoting
/// rule with lexicographic initial ordering: terminating and deterministic
/// for a fixed row/column order. At optimality the returned dual satisfies
/// dual^T b == objective exactly (strong duality, asserted internally).
LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c,
                  const std::vector<Relation>& rel, Sense sense,
                  const std::vector<VarBound>& bounds);

/// All-variables-nonnegative convenience form.
LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c,
                  const std::vector<Relation>& rel, Sense sense);

}  // namespace dijlat
