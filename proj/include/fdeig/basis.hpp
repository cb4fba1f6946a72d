#pragma once

#include <vector>

#include "fdeig/model.hpp"

namespace fdeig {

/// Closed-form eigenpair of the unperturbed problem (q = 0, N = 0).
///
/// Left piece:  u1(x) = sin(k x) / k
/// Right piece: u2(x) = c2 * sin(k (1 - x))
/// with k = sqrt(lambda0).
struct ZeroApproximation {
  BranchId branch;
  double lambda0 = 0.0;
  double k = 0.0;
  double c2 = 0.0;

  double u1(double x) const;
  double du1(double x) const;
  double u2(double x) const;
  double du2(double x) const;
};

/// Absolute defects of the boundary and transmission conditions.
struct MatchingDefects {
  double u1_at_0 = 0.0;
  double slope_at_0 = 0.0;  ///< |u1'(0) - 1|
  double u2_at_1 = 0.0;
  double value_jump = 0.0;  ///< |u2(1/2) - u1(1/2)|
  double flux_jump = 0.0;   ///< |u2'(1/2) - u1'(1/2) - 1|

  double max() const;
  bool within(double tol) const { return max() < tol; }
};

double zero_eigenvalue(const BranchId& branch);
ZeroApproximation zero_eigenfunction(const BranchId& branch);
MatchingDefects check_matching(const ZeroApproximation& z);

/// The first `count` branches of both families, ordered by ascending lambda0.
std::vector<BranchId> ascending_branches(int count);

}  // namespace fdeig
