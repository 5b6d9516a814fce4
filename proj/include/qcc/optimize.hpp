// optimize.hpp: box-constrained derivative-free minimization.
#pragma once

#include <functional>

#include "qcc/linalg.hpp"

namespace qcc {

struct MinimizeOptions {
  std::size_t budget = 400;     // total objective evaluations (floor 100)
  double tol = 1e-8;            // relative spread of simplex values at exit
  Index grid_per_axis = 8;      // coarse seeding grid
};

struct MinimizeResult {
  RealVector x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;  // tol reached within budget
};

// Coarse grid scan followed by Nelder-Mead with candidates clamped to the
// box. The objective may return +infinity for infeasible points. The result
// is a local minimum; nothing stronger is claimed.
MinimizeResult minimize_box(const std::function<double(const RealVector&)>& f,
                            const RealVector& lower, const RealVector& upper,
                            const MinimizeOptions& opts = {});

}  // namespace qcc
