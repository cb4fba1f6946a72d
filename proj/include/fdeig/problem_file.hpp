#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "fdeig/model.hpp"

namespace fdeig {

/// Contents of a problem-definition JSON file:
///
///   { "potential":    {"kind": "polynomial", "coeffs": [0, 1, 3]}
///                   | {"kind": "inverse_sqrt_half"},
///     "nonlinearity": {"coeffs_from_degree_1": [0, 1]},
///     "branch":       {"family": "I" | "II", "sign": 1 | -1, "n": 0},
///     "solver":       {"rank": 4, "mesh": 2048} }
///
/// Only "potential" is required.
struct ProblemFile {
  TransmissionProblem problem;
  std::optional<BranchId> branch;
  std::optional<int> rank;
  std::optional<int> mesh;
};

ProblemFile parse_problem(std::string_view json_text);
ProblemFile load_problem_file(const std::filesystem::path& path);

}  // namespace fdeig
