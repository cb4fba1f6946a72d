#pragma once

// The functional-discrete recursion. Starting from the closed-form zero
// approximation, rank j+1 is obtained from ranks 0..j by
//
//   u^(j+1)'' + lambda0 u^(j+1) = F^(j+1)   on each panel,
//   F^(j+1) = -sum_{p=0..j} lambda^(j+1-p) u^(p) + q u^(j) + A_j(N; u^(0..j)),
//
// with homogeneous boundary and transmission conditions. lambda^(j+1) is
// fixed by the solvability condition before F^(j+1) is formed (the p = 0 term
// of F contains it), then c2^(j+1) and u^(j+1) follow.

#include <optional>
#include <span>
#include <vector>

#include "fdeig/basis.hpp"
#include "fdeig/model.hpp"
#include "fdeig/quadrature.hpp"

namespace fdeig {

/// F on both panels, each split into q-free and q-weighted parts.
struct RhsField {
  SplitField left;
  SplitField right;

  const SplitField& operator[](Panel p) const { return p == Panel::left ? left : right; }
};

/// Rank-j term (lambda^(j), u^(j), c2^(j)). Rank 0 is the sampled zero
/// approximation and carries no right-hand side.
struct Correction {
  int rank = 0;
  double lambda = 0.0;
  GridFunction u;
  GridFunction du;
  double c2 = 0.0;
  std::optional<RhsField> rhs;
};

class FdSolution {
 public:
  FdSolution(BranchId branch, ZeroApproximation zero, Mesh mesh, std::vector<Correction> corrections);

  const BranchId& branch() const { return branch_; }
  const ZeroApproximation& zero() const { return zero_; }
  const Mesh& mesh() const { return mesh_; }
  std::span<const Correction> corrections() const { return corrections_; }
  const Correction& correction(int j) const { return corrections_.at(static_cast<std::size_t>(j)); }
  int rank() const { return static_cast<int>(corrections_.size()) - 1; }

  /// Truncated sums through rank m (m defaults to the full rank).
  double eigenvalue(std::optional<int> m = std::nullopt) const;
  GridFunction eigenfunction(std::optional<int> m = std::nullopt) const;
  GridFunction derivative(std::optional<int> m = std::nullopt) const;

  /// Drops corrections above rank m.
  FdSolution truncated(int m) const;

 private:
  int clamp_rank(std::optional<int> m) const;

  BranchId branch_;
  ZeroApproximation zero_;
  Mesh mesh_;
  std::vector<Correction> corrections_;
};

struct SolveOptions {
  int rank = 4;
  int mesh_intervals = 2048;
};

/// A_j: coefficient of t^j in N(sum_k u_k t^k), by truncated power-series
/// composition. Uses u_values[0..j].
double adomian(const NonlinearitySpec& n, std::span<const double> u_values, int j);

/// Solvability-condition value of lambda^(j+1), j = corrections.size() - 1.
double lambda_correction(const ZeroApproximation& zero, std::span<const Correction> corrections,
                         const TransmissionProblem& problem);

/// F^(j+1) once lambda^(j+1) is known.
RhsField rhs_assemble(std::span<const Correction> corrections, double lambda_next,
                      const TransmissionProblem& problem);

double c2_correction(const ZeroApproximation& zero, const RhsField& rhs, const PotentialSpec& q);

struct EigenfunctionCorrection {
  GridFunction u;
  GridFunction du;
};

EigenfunctionCorrection u_correction(const ZeroApproximation& zero, const RhsField& rhs, double c2,
                                     const PotentialSpec& q);

/// Rank-0 correction sampled on the mesh.
Correction sample_zero_approximation(const ZeroApproximation& zero, const Mesh& mesh);

FdSolution fd_solve(const TransmissionProblem& problem, const BranchId& branch,
                    const SolveOptions& options = {});

}  // namespace fdeig
