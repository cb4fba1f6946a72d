#pragma once

// Independent check of FD eigenvalues by shooting: integrate
// u'' = (q - lambda) u + N(u) from (u, u') = (0, 1) at x = 0, add the unit
// flux jump at x = 1/2, and root-find lambda on the terminal value u(1).

#include <vector>

#include "fdeig/model.hpp"

namespace fdeig {

struct TrajectorySample {
  double x = 0.0;
  double u = 0.0;
  double du = 0.0;
};

struct ShotResult {
  double miss = 0.0;  ///< u2(1)
  std::vector<TrajectorySample> trajectory;
  int steps = 0;
};

inline constexpr double kDefaultShootTol = 1e-12;

/// Adaptive Dormand-Prince integration with absolute and relative tolerance
/// `tol`. Refuses singular potentials (SingularPotential); IntegrationFailure
/// if the integrator breaks down.
ShotResult shoot(const TransmissionProblem& problem, double lambda, double tol = kDefaultShootTol);

/// Eigenvalue in [lo, hi] where the miss changes sign. BracketError otherwise.
double find_eigenvalue(const TransmissionProblem& problem, double lo, double hi,
                       double tol = kDefaultShootTol);

/// Grows [guess - d, guess + d] until the miss changes sign, then solves.
double find_eigenvalue_near(const TransmissionProblem& problem, double guess,
                            double tol = kDefaultShootTol, double max_halfwidth = 5.0);

}  // namespace fdeig
