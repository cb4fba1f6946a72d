#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fdeig/convergence.hpp"
#include "fdeig/fdcore.hpp"
#include "fdeig/problem_file.hpp"
#include "fdeig/residual.hpp"

namespace fdeig {

/// Command-line settings before merging with the problem file. Unset fields
/// fall back to the file, then to the defaults below.
struct RunConfig {
  std::filesystem::path problem_path;
  std::optional<std::string> family;  ///< "I", "II" or "auto"
  std::optional<int> sign;
  std::optional<int> n;
  std::optional<int> first;
  std::optional<int> rank;
  std::optional<int> mesh;
  std::optional<double> tol;
  std::filesystem::path out_dir = ".";
  int jobs = 1;
};

inline constexpr int kDefaultRank = 4;
inline constexpr int kDefaultMesh = 2048;
inline constexpr int kMaxMesh = 1 << 16;

struct ResolvedRun {
  TransmissionProblem problem;
  std::vector<BranchId> branches;
  int rank = kDefaultRank;
  int mesh = kDefaultMesh;
  std::optional<double> tol;
  std::filesystem::path out_dir;
  int jobs = 1;
};

/// Applies flag > file > default precedence and validates the result.
ResolvedRun resolve_config(const RunConfig& config, const ProblemFile& file);
ResolvedRun resolve_config(const RunConfig& config);

struct BranchResult {
  FdSolution solution;
  std::vector<ResidualReport> residuals;  ///< m = 0..rank
  ConvergenceReport convergence;
  int mesh = 0;
  std::optional<double> quadrature_error;  ///< set when --tol drove refinement
};

/// Solves one branch. With `tol`, the mesh is doubled until the eigenvalue
/// change between M and 2M, Richardson-scaled by 1/15, is below tol.
BranchResult solve_branch(const TransmissionProblem& problem, const BranchId& branch, int rank,
                          int mesh, std::optional<double> tol = std::nullopt);

/// Runs fn(0..count-1) on up to `jobs` threads; results are independent of
/// the thread count.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

std::string format_branch_csv(const BranchResult& result);
std::string format_summary_json(const BranchResult& result, const TransmissionProblem& problem);
/// Rows m = 0..rank, one column per branch.
std::string format_log_table_csv(const std::vector<BranchResult>& results);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace fdeig
