#pragma once

#include <vector>

#include "subspace/qcalc.hpp"

namespace subspace {
namespace ratlp {

// maximize objective . x subject to rows[i] . x <= rhs[i], x >= 0
struct Lp {
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  std::vector<Rat> objective;
};

enum class Status { optimal, infeasible, unbounded };

struct LpResult {
  Status status = Status::infeasible;
  Rat optimum = 0;
  std::vector<Rat> solution;
};

// exact two-phase primal simplex, Bland's rule (no cycling), deterministic
LpResult simplex_max(const Lp& lp);

struct BbResult {
  bool proven = false;    // search space exhausted within budget
  bool feasible = false;  // some all-integer point was found
  Int best = 0;           // incumbent objective value
  Int bound = 0;          // valid upper bound on the integer optimum
  std::vector<Int> solution;
  long nodes = 0;
};

// integer maximization by LP branch and bound; budget counts simplex solves.
// Callers must pass a bounded polytope and an integer objective.
BbResult branch_and_bound_max(const Lp& lp, long node_budget);

}  // namespace ratlp
}  // namespace subspace
