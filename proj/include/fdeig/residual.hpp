#pragma once

#include <optional>
#include <vector>

#include "fdeig/fdcore.hpp"
#include "fdeig/model.hpp"
#include "fdeig/quadrature.hpp"

namespace fdeig {

struct ResidualReport {
  double left_norm = 0.0;
  double right_norm = 0.0;
  double norm = 0.0;  ///< max of the panel norms
  double log_norm = 0.0;
  int zero_count = 0;
};

/// nu = u'' + (lambda - q) u - N(u) at the nodes, with u'' taken from the
/// correction equations: u'' = -lambda0 u + sum_{j=1..m} F^(j).
/// Throws SingularPotential for a singular q.
GridFunction pointwise_residual_field(const FdSolution& sol, const TransmissionProblem& problem,
                                      std::optional<int> m = std::nullopt);
ResidualReport pointwise_residual(const FdSolution& sol, const TransmissionProblem& problem,
                                  std::optional<int> m = std::nullopt);

/// Once-integrated residual
///   nu1(x) = u'(x) - u'(0) + int_0^x [(lambda - q) u - N(u)],
///   nu2(x) = nu1(1/2) + u2'(x) - u2'(1/2) + int_{1/2}^x [(lambda - q) u - N(u)],
/// with the q u part integrated by the singularity-aware rule.
GridFunction integrated_residual_field(const FdSolution& sol, const TransmissionProblem& problem,
                                       std::optional<int> m = std::nullopt);
ResidualReport integrated_residual(const FdSolution& sol, const TransmissionProblem& problem,
                                   std::optional<int> m = std::nullopt);

/// Pointwise for smooth potentials, integrated otherwise.
ResidualReport residual(const FdSolution& sol, const TransmissionProblem& problem,
                        std::optional<int> m = std::nullopt);

/// Sign changes of u strictly inside (0,1), ignoring |u| < tol. The default
/// tolerance is 1e-6 ||u||_inf.
int count_interior_zeros(const GridFunction& u, std::optional<double> tol = std::nullopt);

/// l = ln(norm) element-wise; norms[n][m] -> table[n][m].
std::vector<std::vector<double>> log_table(const std::vector<std::vector<double>>& norms);

}  // namespace fdeig
