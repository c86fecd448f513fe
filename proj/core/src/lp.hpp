#pragma once

// Exact rational feasibility solver for systems A·x >= b with free variables.
// Decided through the Farkas dual — maximize bᵀy subject to Aᵀy = 0,
// Σy <= 1, y >= 0 — solved by a dense two-phase simplex with Bland's rule.
// The optimum is 0 exactly when the primal is feasible, in which case the
// duals of the equality rows are a primal witness; otherwise the optimal y is
// a Farkas certificate. Both certificates are re-checked by substitution.

#include <optional>
#include <vector>

#include "cubeflip/rational.hpp"

namespace cubeflip::lp {

struct Feasibility {
  bool feasible = false;
  std::vector<Rational> witness;  // x with A·x >= b, when feasible
  std::vector<Rational> farkas;   // y >= 0 with yᵀA = 0, yᵀb > 0, otherwise
};

Feasibility solve_feasibility(const std::vector<std::vector<Rational>>& A,
                              const std::vector<Rational>& b);

}  // namespace cubeflip::lp
