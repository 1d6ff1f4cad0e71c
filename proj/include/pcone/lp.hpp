#pragma once

#include "pcone/linalg.hpp"

namespace pcone {

// min c'x  s.t.  Ax = b, x >= 0, solved by a dense two-phase simplex with
// Bland's rule. Problem sizes here are tiny (tens of rows/columns).
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded } status;
  Vec x;
  double value = 0.0;
};

LpResult solve_lp(const Mat& A, const Vec& b, const Vec& c);

}  // namespace pcone
