#pragma once

#include <vector>

#include "toric/ratlinalg.hpp"

namespace toric {

// Exact two-phase simplex (Bland's rule) over { x >= 0 : A x = b }.
struct SimplexResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status;
  Rat objective;  // when optimal
  RatVec x;       // when optimal
  // when infeasible: y with y^T A >= 0 componentwise and y^T b < 0
  RatVec farkas;
};

SimplexResult lp_maximize(const std::vector<RatVec>& a_rows, const RatVec& b, const RatVec& c);
SimplexResult lp_feasible(const std::vector<RatVec>& a_rows, const RatVec& b);

// Feasibility of x = sum of nonnegative multiples of the given generators.
bool in_conical_span(const std::vector<IntVec>& generators, const RatVec& x);

}  // namespace toric
