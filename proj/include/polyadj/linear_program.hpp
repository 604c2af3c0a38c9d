#pragma once

// Exact rational linear programming (two-phase simplex, Bland's rule).

#include <polyadj/exactmath.hpp>

#include <span>

namespace polyadj {

/// <normal, y> >= offset
struct LinearConstraint {
  IntVector normal;
  Rational offset;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;       // meaningful when Optimal
  RatVector witness;    // an optimal point when Optimal, a feasible point when Unbounded
};

/// Maximizes <objective, y> over {y : <normal_i, y> >= offset_i for all i}
/// with y free. Throws Error(DimensionMismatch) when some normal does not
/// have the objective's length.
LpResult lp_feasible_max(std::span<const LinearConstraint> constraints, std::span<const Rational> objective);

}  // namespace polyadj
