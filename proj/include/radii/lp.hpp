#pragma once

#include <optional>
#include <vector>

#include "radii/vector.hpp"

namespace radii {

/// normal·x ≤ bound (inequality) or normal·x = bound (equality).
struct Constraint {
  Vector normal;
  Scalar bound;
};

/// maximize objective·x over free variables x.
struct LinearProgram {
  Vector objective;
  std::vector<Constraint> inequalities;
  std::vector<Constraint> equalities;

  size_t dim() const { return objective.size(); }
};

enum class LPStatus { optimal, infeasible, unbounded };

const char* to_string(LPStatus s);

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  std::optional<Vector> point;
  std::optional<Scalar> value;
  /// One multiplier per inequality (all ≥ 0), then one per equality (free).
  /// Satisfies Σ y_i normal_i = objective and Σ y_i bound_i = value.
  std::optional<std::vector<Scalar>> dual;

  bool optimal() const { return status == LPStatus::optimal; }
};

/// Exact two-phase primal simplex with Bland's rule.
///
/// Deterministic: identical programs give identical results. Every optimal
/// result is checked against its dual certificate before it is returned.
LPResult lp_solve(const LinearProgram& lp);

/// Optimal point that is lexicographically smallest among all optimal
/// points. Value and dual are those of the underlying optimum.
LPResult lp_lex_optimal(const LinearProgram& lp);

/// Checks feasibility, dual feasibility and strong duality exactly.
bool certificate_holds(const LinearProgram& lp, const LPResult& result);

}  // namespace radii
