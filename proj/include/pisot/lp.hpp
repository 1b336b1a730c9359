#pragma once

// Exact linear programming in a handful of variables.
//
//   maximize  c . z   subject to   A z <= b,   z free.
//
// The solver walks vertices of the feasible polyhedron (primal simplex on
// the inequality form) with Bland's rule, so it terminates on degenerate
// problems. It needs a feasible starting vertex: a set of n row indices whose
// submatrix is nonsingular and whose intersection point satisfies every row.

#include "pisot/linalg.hpp"

#include <cstddef>
#include <vector>

namespace pisot {

enum class LpStatus { optimal, unbounded };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rat value;
  RatVec point;
  std::vector<std::size_t> basis;
  std::size_t iterations = 0;
};

/// Throws InvalidArgument when the starting basis is singular or infeasible.
LpResult maximize_lp(const RatMatrix& a, const RatVec& b, const RatVec& c,
                     std::vector<std::size_t> start_basis);

} // namespace pisot
