#include "fdeig/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdeig/basis.hpp"
#include "fdeig/error.hpp"
#include "fdeig/oracle.hpp"

namespace fdeig {

namespace {

using nlohmann::ordered_json;

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

std::vector<BranchId> first_of_family(std::optional<Family> family, int k) {
  if (!family) return ascending_branches(k);
  std::vector<BranchId> out;
  for (const auto& b : ascending_branches(3 * k + 3)) {
    if (b.family == *family) out.push_back(b);
    if (static_cast<int>(out.size()) == k) break;
  }
  return out;
}

std::optional<Family> parse_family(const std::string& s) {
  if (s == "I") return Family::I;
  if (s == "II") return Family::II;
  if (s == "auto") return std::nullopt;
  throw DomainError("family must be I, II or auto, got '" + s + "'");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
}

std::vector<BranchResult> solve_all(const ResolvedRun& run) {
  std::vector<std::optional<BranchResult>> slots(run.branches.size());
  parallel_for(static_cast<int>(run.branches.size()), run.jobs, [&](int i) {
    slots[static_cast<std::size_t>(i)] =
        solve_branch(run.problem, run.branches[static_cast<std::size_t>(i)], run.rank, run.mesh,
                     run.tol);
  });
  std::vector<BranchResult> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void write_branch_artifacts(const ResolvedRun& run, const std::vector<BranchResult>& results,
                            std::ostream& out) {
  std::filesystem::create_directories(run.out_dir);
  for (const auto& r : results) {
    const std::string tag = r.solution.branch().tag();
    write_file(run.out_dir / ("fd_" + tag + ".csv"), format_branch_csv(r));
    write_file(run.out_dir / ("summary_" + tag + ".json"), format_summary_json(r, run.problem));
    const auto& res = r.residuals.back();
    out << tag << "  lambda=" << sci(r.solution.eigenvalue()) << "  residual=" << sci(res.norm)
        << "  zeros=" << res.zero_count << "\n";
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

ResolvedRun resolve_config(const RunConfig& config, const ProblemFile& file) {
  ResolvedRun run;
  run.problem = file.problem;
  run.rank = config.rank.value_or(file.rank.value_or(kDefaultRank));
  run.mesh = config.mesh.value_or(file.mesh.value_or(kDefaultMesh));
  run.tol = config.tol;
  run.out_dir = config.out_dir;
  run.jobs = std::max(1, config.jobs);
  if (run.rank < 0) throw DomainError("rank must be >= 0");
  if (run.mesh < 4 || run.mesh % 2 != 0) throw DomainError("mesh must be even and >= 4");
  if (run.tol && !(*run.tol > 0.0)) throw DomainError("tol must be positive");

  std::optional<Family> family;
  if (config.family)
    family = parse_family(*config.family);
  else if (file.branch)
    family = file.branch->family;

  if (config.first) {
    if (*config.first < 1) throw DomainError("--first needs K >= 1");
    run.branches = first_of_family(family, *config.first);
    return run;
  }
  const int n = config.n.value_or(file.branch ? file.branch->n : 0);
  if (!family) {
    if (n < 0) throw InvalidBranch("ascending index must be >= 0");
    run.branches = {ascending_branches(n + 1).at(static_cast<std::size_t>(n))};
    return run;
  }
  BranchId b;
  b.family = *family;
  b.sign = config.sign.value_or(file.branch ? file.branch->sign : 1);
  b.n = n;
  run.branches = {b.canonical()};
  return run;
}

ResolvedRun resolve_config(const RunConfig& config) {
  return resolve_config(config, load_problem_file(config.problem_path));
}

BranchResult solve_branch(const TransmissionProblem& problem, const BranchId& branch, int rank,
                          int mesh, std::optional<double> tol) {
  SolveOptions opts{rank, mesh};
  FdSolution sol = fd_solve(problem, branch, opts);
  std::optional<double> qerr;
  if (tol) {
    while (true) {
      SolveOptions finer{rank, 2 * opts.mesh_intervals};
      FdSolution next = fd_solve(problem, branch, finer);
      qerr = std::abs(next.eigenvalue() - sol.eigenvalue()) / 15.0;
      sol = std::move(next);
      opts = finer;
      if (*qerr <= *tol || opts.mesh_intervals >= kMaxMesh) break;
    }
  }
  BranchResult r{std::move(sol), {}, convergence_report(problem, branch, rank), opts.mesh_intervals,
                 qerr};
  for (int m = 0; m <= rank; ++m) r.residuals.push_back(residual(r.solution, problem, m));
  return r;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  const int workers = std::clamp(jobs, 1, std::max(1, count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string format_branch_csv(const BranchResult& result) {
  std::ostringstream os;
  os << "m,lambda,sup_u1,sup_u2,residual_norm\n";
  const auto& sol = result.solution;
  for (int m = 0; m <= sol.rank(); ++m) {
    const auto& c = sol.correction(m);
    os << m << ',' << sci(sol.eigenvalue(m)) << ',' << sci(c.u.left().sup_norm()) << ','
       << sci(c.u.right().sup_norm()) << ',' << sci(result.residuals[static_cast<std::size_t>(m)].norm)
       << '\n';
  }
  return os.str();
}

std::string format_summary_json(const BranchResult& result, const TransmissionProblem& problem) {
  const auto& sol = result.solution;
  const auto& b = sol.branch();
  const auto& conv = result.convergence;
  ordered_json j;
  j["branch"] = {{"tag", b.tag()},
                 {"family", b.family == Family::I ? "I" : "II"},
                 {"sign", b.sign},
                 {"n", b.n}};
  j["potential"] = problem.potential.describe();
  j["nonlinearity"] = std::vector<double>(problem.nonlinearity.coeffs().begin(),
                                          problem.nonlinearity.coeffs().end());
  j["rank"] = sol.rank();
  j["mesh"] = result.mesh;
  if (result.quadrature_error) j["quadrature_error_estimate"] = *result.quadrature_error;
  j["lambda0"] = sol.zero().lambda0;
  j["lambda"] = sol.eigenvalue();
  ordered_json corr = ordered_json::array();
  for (const auto& c : sol.corrections()) corr.push_back(c.lambda);
  j["lambda_corrections"] = corr;
  const auto& res = result.residuals.back();
  j["residual"] = {{"kind", problem.potential.singularity() ? "integrated" : "pointwise"},
                   {"norm", res.norm},
                   {"left_norm", res.left_norm},
                   {"right_norm", res.right_norm},
                   {"log_norm", res.log_norm}};
  j["zero_count"] = res.zero_count;
  ordered_json decay = ordered_json::array();
  for (const auto& d : conv.decay)
    decay.push_back({{"m", d.rank}, {"factor", number(d.factor)}, {"note", d.note}});
  j["convergence"] = {{"q_norm", conv.q_norm},
                      {"radius", number(conv.radius)},
                      {"radius_method", conv.radius_method},
                      {"radius_interval", {number(conv.radius_lower), number(conv.radius_upper)}},
                      {"scaling", {{"a", conv.scaling.a}, {"b", conv.scaling.b}}},
                      {"ratio", number(conv.ratio)},
                      {"condition_satisfied", conv.condition_satisfied},
                      {"error_constants", "unknown"},
                      {"decay", decay}};
  return j.dump(2) + "\n";
}

std::string format_log_table_csv(const std::vector<BranchResult>& results) {
  std::vector<std::vector<double>> norms;
  for (const auto& r : results) {
    auto& row = norms.emplace_back();
    for (const auto& res : r.residuals) row.push_back(res.norm);
  }
  const auto table = log_table(norms);
  std::ostringstream os;
  os << 'm';
  for (const auto& r : results) os << ',' << r.solution.branch().tag();
  os << '\n';
  std::size_t rows = 0;
  for (const auto& t : table) rows = std::max(rows, t.size());
  for (std::size_t m = 0; m < rows; ++m) {
    os << m;
    for (const auto& t : table) os << ',' << (m < t.size() ? sci(t[m]) : "");
    os << '\n';
  }
  return os.str();
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto run = resolve_config(config);
    write_branch_artifacts(run, solve_all(run), out);
    return 0;
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto run = resolve_config(config);
    const auto results = solve_all(run);
    write_branch_artifacts(run, results, out);
    write_file(run.out_dir / "log_residual.csv", format_log_table_csv(results));
    return 0;
  });
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto run = resolve_config(config);
    if (run.problem.potential.singularity()) {
      err << "validate: the shooting oracle needs a potential that is smooth on each panel; "
             "singular potentials are checked by the integrated residual (use 'solve').\n";
      return 2;
    }
    struct Row {
      double fd = 0, oracle = 0;
    };
    std::vector<Row> rows(run.branches.size());
    parallel_for(static_cast<int>(rows.size()), run.jobs, [&](int i) {
      const auto& b = run.branches[static_cast<std::size_t>(i)];
      const double fd = fd_solve(run.problem, b, {run.rank, run.mesh}).eigenvalue();
      rows[static_cast<std::size_t>(i)] = {fd, find_eigenvalue_near(run.problem, fd)};
    });
    std::filesystem::create_directories(run.out_dir);
    std::ostringstream csv;
    csv << "branch,lambda_fd,lambda_oracle,abs_diff\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string tag = run.branches[i].tag();
      const double diff = std::abs(rows[i].fd - rows[i].oracle);
      csv << tag << ',' << sci(rows[i].fd) << ',' << sci(rows[i].oracle) << ',' << sci(diff) << '\n';
      out << tag << "  fd=" << sci(rows[i].fd) << "  oracle=" << sci(rows[i].oracle)
          << "  diff=" << sci(diff) << "\n";
    }
    write_file(run.out_dir / "validation.csv", csv.str());
    return 0;
  });
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Functional-discrete eigenvalue solver for transmission problems"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<std::string> sign;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--problem", config.problem_path, "problem JSON file")->required();
    sub->add_option("--family", config.family, "branch family")
        ->check(CLI::IsMember({"I", "II", "auto"}));
    sub->add_option("--sign", sign, "family I sign")->check(CLI::IsMember({"+", "-"}));
    sub->add_option("--n", config.n, "branch index (ascending index with --family auto)");
    sub->add_option("--first", config.first, "solve the first K branches");
    sub->add_option("--rank", config.rank, "FD rank m");
    sub->add_option("--mesh", config.mesh, "subintervals per panel (even)");
    sub->add_option("--tol", config.tol, "quadrature tolerance; refines the mesh");
    sub->add_option("--out", config.out_dir, "output directory");
    sub->add_option("--jobs", config.jobs, "worker threads");
  };
  auto* solve = app.add_subcommand("solve", "solve branches, write CSV and JSON summaries");
  auto* sweep = app.add_subcommand("sweep", "solve branches and write the log-residual matrix");
  auto* validate = app.add_subcommand("validate", "compare FD eigenvalues with shooting");
  add_common(solve);
  add_common(sweep);
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (sign) config.sign = *sign == "-" ? -1 : 1;

  if (solve->parsed()) return cmd_solve(config, std::cout, std::cerr);
  if (sweep->parsed()) return cmd_sweep(config, std::cout, std::cerr);
  return cmd_validate(config, std::cout, std::cerr);
}

}  // namespace fdeig
