#include "fdeig/fdcore.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "fdeig/error.hpp"

namespace fdeig {

namespace {

constexpr Panel kPanels[] = {Panel::left, Panel::right};

// A_j at every node of one panel.
PanelFunction adomian_panel(const NonlinearitySpec& n, std::span<const Correction> corrections,
                            Panel panel, int j) {
  const auto& mesh = corrections.front().u[panel].mesh_ptr();
  PanelFunction out = PanelFunction::zeros(mesh);
  if (n.empty()) return out;
  std::vector<double> u(static_cast<std::size_t>(j) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int k = 0; k <= j; ++k) u[static_cast<std::size_t>(k)] = corrections[static_cast<std::size_t>(k)].u[panel][i];
    out[i] = adomian(n, u, j);
  }
  return out;
}

// The part of F^(j+1) that does not involve lambda^(j+1):
//   smooth   = -sum_{p=1..j} lambda^(j+1-p) u^(p) + A_j
//   weighted = u^(j)
SplitField partial_field(std::span<const Correction> corrections, Panel panel,
                         const TransmissionProblem& problem) {
  const int j = static_cast<int>(corrections.size()) - 1;
  SplitField f{adomian_panel(problem.nonlinearity, corrections, panel, j),
               corrections.back().u[panel]};
  for (int p = 1; p <= j; ++p)
    f.smooth.add_scaled(-corrections[static_cast<std::size_t>(j + 1 - p)].lambda,
                        corrections[static_cast<std::size_t>(p)].u[panel]);
  return f;
}

// Weight of the solvability condition and its normalising prefactor.
struct Solvability {
  std::function<double(double)> weight;
  double prefactor;
};

Solvability solvability(const ZeroApproximation& zero) {
  const double k = zero.k;
  if (zero.branch.family == Family::I)
    return {[k](double x) { return std::sin(k * (1.0 - x)); }, 8.0 * k / 3.0};
  const double pn = std::numbers::pi * zero.branch.n;
  return {[k](double x) { return std::sin(k * x); },
          zero.branch.n % 2 == 0 ? 8.0 * pn / 3.0 : 8.0 * pn};
}

double weighted_sum(const std::function<double(double)>& w, const SplitField& f, const PotentialSpec& q) {
  const auto wv = PanelFunction::sample(f.smooth.mesh_ptr(), w);
  return integrate(SplitField{wv * f.smooth, wv * f.weighted}, q);
}

}  // namespace

FdSolution::FdSolution(BranchId branch, ZeroApproximation zero, Mesh mesh,
                       std::vector<Correction> corrections)
    : branch_(branch), zero_(zero), mesh_(std::move(mesh)), corrections_(std::move(corrections)) {
  if (corrections_.empty()) throw Error("an FD solution needs at least the zero approximation");
}

int FdSolution::clamp_rank(std::optional<int> m) const {
  const int r = m.value_or(rank());
  if (r < 0 || r > rank()) throw DomainError("rank " + std::to_string(r) + " not computed");
  return r;
}

double FdSolution::eigenvalue(std::optional<int> m) const {
  const int r = clamp_rank(m);
  double sum = 0.0;
  for (int j = 0; j <= r; ++j) sum += corrections_[static_cast<std::size_t>(j)].lambda;
  return sum;
}

GridFunction FdSolution::eigenfunction(std::optional<int> m) const {
  const int r = clamp_rank(m);
  GridFunction sum = corrections_.front().u;
  for (int j = 1; j <= r; ++j) sum += corrections_[static_cast<std::size_t>(j)].u;
  return sum;
}

GridFunction FdSolution::derivative(std::optional<int> m) const {
  const int r = clamp_rank(m);
  GridFunction sum = corrections_.front().du;
  for (int j = 1; j <= r; ++j) sum += corrections_[static_cast<std::size_t>(j)].du;
  return sum;
}

FdSolution FdSolution::truncated(int m) const {
  const int r = clamp_rank(m);
  return FdSolution(branch_, zero_, mesh_,
                    std::vector<Correction>(corrections_.begin(), corrections_.begin() + r + 1));
}

double adomian(const NonlinearitySpec& n, std::span<const double> u_values, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= u_values.size())
    throw DomainError("adomian: need u^(0..j)");
  if (n.empty()) return 0.0;
  const auto len = static_cast<std::size_t>(j) + 1;
  const std::span<const double> base = u_values.first(len);
  std::vector<double> power(base.begin(), base.end());
  std::vector<double> next(len);
  double a = n.coefficient(1) * power[len - 1];
  for (int i = 2; i <= n.degree(); ++i) {
    // power <- power * base, truncated at t^j
    for (std::size_t d = 0; d < len; ++d) {
      double acc = 0.0;
      for (std::size_t e = 0; e <= d; ++e) acc += power[e] * base[d - e];
      next[d] = acc;
    }
    power.swap(next);
    a += n.coefficient(i) * power[len - 1];
  }
  return a;
}

double lambda_correction(const ZeroApproximation& zero, std::span<const Correction> corrections,
                         const TransmissionProblem& problem) {
  if (corrections.empty()) throw DomainError("lambda_correction needs the zero approximation");
  const auto s = solvability(zero);
  double total = 0.0;
  for (Panel p : kPanels)
    total += weighted_sum(s.weight, partial_field(corrections, p, problem), problem.potential);
  return s.prefactor * total;
}

RhsField rhs_assemble(std::span<const Correction> corrections, double lambda_next,
                      const TransmissionProblem& problem) {
  auto build = [&](Panel p) {
    SplitField f = partial_field(corrections, p, problem);
    f.smooth.add_scaled(-lambda_next, corrections.front().u[p]);
    return f;
  };
  return RhsField{build(Panel::left), build(Panel::right)};
}

double c2_correction(const ZeroApproximation& zero, const RhsField& rhs, const PotentialSpec& q) {
  const double k = zero.k;
  if (zero.branch.family == Family::I) {
    const double s = std::sin(0.5 * k);
    if (std::abs(s) < 1e-8) throw InvalidBranch("family I correction on a branch with sin(k/2) = 0");
    auto w = [k](double x) { return std::sin(k * (0.5 - x)); };
    return (weighted_sum(w, rhs.left, q) + weighted_sum(w, rhs.right, q)) / (k * s);
  }
  auto w = [k](double x) { return std::cos(k * x); };
  return -(weighted_sum(w, rhs.left, q) + weighted_sum(w, rhs.right, q)) / k;
}

EigenfunctionCorrection u_correction(const ZeroApproximation& zero, const RhsField& rhs, double c2,
                                     const PotentialSpec& q) {
  const double k = zero.k;
  auto left = kernel_convolution(zero.lambda0, rhs.left, q, Direction::from_left);
  auto right = kernel_convolution(zero.lambda0, rhs.right, q, Direction::from_right);
  const auto x = right.value.mesh().nodes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    right.value[i] = c2 * std::sin(k * (1.0 - x[i])) - right.value[i];
    right.derivative[i] = -c2 * k * std::cos(k * (1.0 - x[i])) - right.derivative[i];
  }
  return {GridFunction(std::move(left.value), std::move(right.value)),
          GridFunction(std::move(left.derivative), std::move(right.derivative))};
}

Correction sample_zero_approximation(const ZeroApproximation& zero, const Mesh& mesh) {
  Correction c;
  c.rank = 0;
  c.lambda = zero.lambda0;
  c.c2 = zero.c2;
  c.u = GridFunction::sample(
      mesh, [&](double x) { return zero.u1(x); }, [&](double x) { return zero.u2(x); });
  c.du = GridFunction::sample(
      mesh, [&](double x) { return zero.du1(x); }, [&](double x) { return zero.du2(x); });
  return c;
}

FdSolution fd_solve(const TransmissionProblem& problem, const BranchId& branch,
                    const SolveOptions& options) {
  if (options.rank < 0) throw DomainError("rank must be >= 0");
  const ZeroApproximation zero = zero_eigenfunction(branch);
  Mesh mesh = Mesh::for_potential(options.mesh_intervals, problem.potential);

  std::vector<Correction> corrections;
  corrections.reserve(static_cast<std::size_t>(options.rank) + 1);
  corrections.push_back(sample_zero_approximation(zero, mesh));

  for (int j = 0; j < options.rank; ++j) {
    Correction next;
    next.rank = j + 1;
    next.lambda = lambda_correction(zero, corrections, problem);
    RhsField rhs = rhs_assemble(corrections, next.lambda, problem);
    next.c2 = c2_correction(zero, rhs, problem.potential);
    auto [u, du] = u_correction(zero, rhs, next.c2, problem.potential);
    next.u = std::move(u);
    next.du = std::move(du);
    next.rhs = std::move(rhs);
    corrections.push_back(std::move(next));
  }
  return FdSolution(zero.branch, zero, std::move(mesh), std::move(corrections));
}

}  // namespace fdeig
