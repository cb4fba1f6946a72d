#include "fdeig/problem_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fdeig/error.hpp"

namespace fdeig {

namespace {

using nlohmann::json;

PotentialSpec parse_potential(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "polynomial") return PotentialSpec::polynomial(j.at("coeffs").get<std::vector<double>>());
  if (kind == "inverse_sqrt_half") return PotentialSpec::inverse_sqrt_half();
  throw ProblemFileError("unknown potential kind '" + kind + "'");
}

BranchId parse_branch(const json& j) {
  BranchId b;
  const auto family = j.at("family").get<std::string>();
  if (family == "I")
    b.family = Family::I;
  else if (family == "II")
    b.family = Family::II;
  else
    throw ProblemFileError("branch family must be \"I\" or \"II\", got '" + family + "'");
  b.sign = j.value("sign", 1);
  b.n = j.at("n").get<int>();
  try {
    return b.canonical();
  } catch (const InvalidBranch& e) {
    throw ProblemFileError(e.what());
  }
}

}  // namespace

ProblemFile parse_problem(std::string_view json_text) {
  ProblemFile out;
  try {
    const json j = json::parse(json_text);
    out.problem.potential = parse_potential(j.at("potential"));
    if (j.contains("nonlinearity"))
      out.problem.nonlinearity = NonlinearitySpec(
          j.at("nonlinearity").at("coeffs_from_degree_1").get<std::vector<double>>());
    if (j.contains("branch")) out.branch = parse_branch(j.at("branch"));
    if (j.contains("solver")) {
      const auto& s = j.at("solver");
      if (s.contains("rank")) out.rank = s.at("rank").get<int>();
      if (s.contains("mesh")) out.mesh = s.at("mesh").get<int>();
    }
  } catch (const json::exception& e) {
    throw ProblemFileError(std::string("malformed problem file: ") + e.what());
  }
  return out;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError("cannot open problem file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace fdeig
