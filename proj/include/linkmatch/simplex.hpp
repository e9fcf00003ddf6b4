#pragma once

#include <cstdint>
#include <vector>

#include "linkmatch/rational.hpp"

namespace linkmatch {

// maximise c.x subject to A x <= b, x >= 0, with integer data and b >= 0
// (the origin is feasible, so no phase one is needed). A is row-major,
// rows x cols.
struct PackingLp {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;
};

struct LpSolution {
  enum class Status { optimal, unbounded };
  Status status = Status::optimal;
  Rational value;
  std::vector<Rational> primal;  // size cols
  std::vector<Rational> dual;    // size rows; optimal for min b.y, A^T y >= c, y >= 0
  long pivots = 0;
  bool used_bignum = false;
};

// Exact primal simplex with Bland's rule on an integer (fraction-free)
// tableau. Entries are kept as minors of the input, so the division in each
// pivot is exact. Runs on 64-bit integers first and restarts on GMP integers
// if an intermediate leaves that range.
LpSolution solve_packing_lp(const PackingLp& lp);

}  // namespace linkmatch
