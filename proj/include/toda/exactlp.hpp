#pragma once

// Exact rational linear programming, just enough for polytope work:
// feasibility of {x >= 0 : A x = b} by a dense phase-1 simplex with Bland's
// rule, so termination and the verdict are unconditional.

#include <vector>

#include "toda/matrix.hpp"
#include "toda/rational.hpp"

namespace toda::exactlp {

bool equality_feasible(const linalg::Matrix<Rat>& a, const std::vector<Rat>& b);

// Is x a convex combination of the given points (in R^dim)?
bool in_convex_hull(const std::vector<Rat>& x,
                    const std::vector<std::vector<Rat>>& points);

}  // namespace toda::exactlp
