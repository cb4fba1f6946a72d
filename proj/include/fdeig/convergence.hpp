#pragma once

// Computable parts of the convergence theory: the majorant sequences that
// dominate the scaled correction norms, the radius R of their generating
// function, the branch ratio r_n and the decay factor r_n^m / (m + 1).
//
// The constants c, eps and C appearing in the full error bounds have no
// constructive definition and are not computed.

#include <limits>
#include <string>
#include <vector>

#include "fdeig/model.hpp"

namespace fdeig {

inline constexpr double kMajorantStart = 8.0 / 3.0;  // v̄_0 = ||u^(0)/b||_inf
inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

/// ||u^(j+1)|| <= (1/a)[...], |lambda^(j+1)| <= (1/b)[...] for this branch.
struct ScalingConstants {
  double a = 0.0;
  double b = 0.0;
};

ScalingConstants scaling_constants(const BranchId& branch);

/// Majorant sequences v̄_j, μ̄_j, stored scaled as v̄_j * scale^j.
/// term()/mu_term() return the unscaled values.
struct MajorantState {
  double v0 = kMajorantStart;
  double q_norm = 0.0;
  double scale = 1.0;
  std::vector<double> v;   ///< scaled v̄_0..v̄_J
  std::vector<double> mu;  ///< scaled μ̄_0..μ̄_J, mu[0] unused (0)
  bool saturated = false;  ///< a term overflowed

  int terms() const { return static_cast<int>(v.size()) - 1; }
  double term(int j) const;
  double mu_term(int j) const;
};

/// Closed-form radius of the linear majorant series; +inf for q_norm = 0.
double radius_linear(double q_norm);

/// family I: (2 + sqrt 3) / (sqrt 3 sqrt(lambda0) R); family II: 1 / (pi n R).
double convergence_ratio(const BranchId& branch, double radius);

/// Runs the majorant recurrences up to index J. `majorant` supplies the
/// coefficients of N̄ (their absolute values are used); empty means linear.
MajorantState majorant_sequence(double q_norm, const NonlinearitySpec& majorant, int terms,
                                double scale = 1.0);

struct RadiusEstimate {
  double radius = kInfiniteRadius;  ///< lim inf of v̄_j / v̄_{j+1} over the tail
  double lower = kInfiniteRadius;
  double upper = kInfiniteRadius;
  double extrapolated = kInfiniteRadius;  ///< tail ratios fitted as R + c/j
  bool monotone = true;
  int terms = 0;
};

/// Ratio-test estimate of the radius of convergence of sum v̄_j z^j.
/// Needs at least 10 terms.
RadiusEstimate estimate_radius_nonlinear(const MajorantState& state);

/// Picks a scale automatically and runs the ratio test on `terms` terms.
RadiusEstimate estimate_radius(double q_norm, const NonlinearitySpec& nonlinearity, int terms);

/// Radius from the branch point of the inverse map z(f): the maximum of
/// z over f > v̄_0. Independent of the ratio test.
double branch_point_radius(double q_norm, const NonlinearitySpec& nonlinearity);

struct DecayReport {
  double ratio = 0.0;
  int rank = 0;
  double factor = 0.0;  ///< ratio^m / (m + 1)
  bool condition_satisfied = false;
  std::string note;
};

DecayReport decay_report(double ratio, int m);

struct ConvergenceReport {
  double q_norm = 0.0;
  double radius = kInfiniteRadius;
  std::string radius_method;  ///< "closed_form" or "ratio_test"
  double radius_lower = kInfiniteRadius;
  double radius_upper = kInfiniteRadius;
  ScalingConstants scaling;
  double ratio = 0.0;
  bool condition_satisfied = false;
  std::vector<DecayReport> decay;  ///< m = 0..rank
};

ConvergenceReport convergence_report(const TransmissionProblem& problem, const BranchId& branch,
                                     int rank, int majorant_terms = 200);

}  // namespace fdeig
