#include "fdeig/residual.hpp"

#include <cmath>

#include "fdeig/error.hpp"

namespace fdeig {

namespace {

constexpr Panel kPanels[] = {Panel::left, Panel::right};

int resolve_rank(const FdSolution& sol, std::optional<int> m) {
  const int r = m.value_or(sol.rank());
  if (r < 0 || r > sol.rank()) throw DomainError("rank " + std::to_string(r) + " not computed");
  return r;
}

PanelFunction nonlinear_part(const NonlinearitySpec& n, const PanelFunction& u) {
  PanelFunction out = PanelFunction::zeros(u.mesh_ptr());
  if (n.empty()) return out;
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = n(u[i]);
  return out;
}

ResidualReport summarize(const GridFunction& nu, const GridFunction& u) {
  ResidualReport r;
  r.left_norm = nu.left().sup_norm();
  r.right_norm = nu.right().sup_norm();
  r.norm = std::max(r.left_norm, r.right_norm);
  r.log_norm = std::log(r.norm);
  r.zero_count = count_interior_zeros(u);
  return r;
}

}  // namespace

GridFunction pointwise_residual_field(const FdSolution& sol, const TransmissionProblem& problem,
                                      std::optional<int> m) {
  const auto& q = problem.potential;
  if (q.singularity())
    throw SingularPotential("pointwise residual needs a smooth potential; use integrated_residual");
  const int r = resolve_rank(sol, m);
  const double lambda = sol.eigenvalue(r);
  const double lambda0 = sol.zero().lambda0;
  const GridFunction u = sol.eigenfunction(r);

  GridFunction nu = GridFunction::zeros(sol.mesh());
  for (Panel p : kPanels) {
    PanelFunction& out = nu[p];
    for (int j = 1; j <= r; ++j) out += sol.correction(j).rhs->operator[](p).pointwise(q);
    const PanelFunction& up = u[p];
    const auto x = up.mesh().nodes();
    for (std::size_t i = 0; i < up.size(); ++i) out[i] += (lambda - lambda0 - q(x[i])) * up[i];
    out -= nonlinear_part(problem.nonlinearity, up);
  }
  return nu;
}

ResidualReport pointwise_residual(const FdSolution& sol, const TransmissionProblem& problem,
                                  std::optional<int> m) {
  const int r = resolve_rank(sol, m);
  return summarize(pointwise_residual_field(sol, problem, r), sol.eigenfunction(r));
}

GridFunction integrated_residual_field(const FdSolution& sol, const TransmissionProblem& problem,
                                       std::optional<int> m) {
  const int r = resolve_rank(sol, m);
  const double lambda = sol.eigenvalue(r);
  const GridFunction u = sol.eigenfunction(r);
  const GridFunction du = sol.derivative(r);

  auto panel_part = [&](Panel p) {
    const PanelFunction& up = u[p];
    SplitField integrand{lambda * up - nonlinear_part(problem.nonlinearity, up), -1.0 * up};
    PanelFunction nu = cumulative(integrand, problem.potential);
    const PanelFunction& dp = du[p];
    for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += dp[i] - dp.front();
    return nu;
  };
  PanelFunction left = panel_part(Panel::left);
  PanelFunction right = panel_part(Panel::right);
  const double carry = left.back();
  for (std::size_t i = 0; i < right.size(); ++i) right[i] += carry;
  return GridFunction(std::move(left), std::move(right));
}

ResidualReport integrated_residual(const FdSolution& sol, const TransmissionProblem& problem,
                                   std::optional<int> m) {
  const int r = resolve_rank(sol, m);
  return summarize(integrated_residual_field(sol, problem, r), sol.eigenfunction(r));
}

ResidualReport residual(const FdSolution& sol, const TransmissionProblem& problem,
                        std::optional<int> m) {
  if (problem.potential.singularity()) return integrated_residual(sol, problem, m);
  return pointwise_residual(sol, problem, m);
}

int count_interior_zeros(const GridFunction& u, std::optional<double> tol) {
  const double t = tol.value_or(1e-6 * u.sup_norm());
  int count = 0;
  int last = 0;
  auto visit = [&](double v) {
    if (std::abs(v) < t || v == 0.0) return;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++count;
    last = s;
  };
  const auto& l = u.left();
  for (std::size_t i = 1; i < l.size(); ++i) visit(l[i]);
  const auto& r = u.right();
  for (std::size_t i = 1; i + 1 < r.size(); ++i) visit(r[i]);
  return count;
}

std::vector<std::vector<double>> log_table(const std::vector<std::vector<double>>& norms) {
  std::vector<std::vector<double>> out;
  out.reserve(norms.size());
  for (const auto& row : norms) {
    auto& o = out.emplace_back();
    o.reserve(row.size());
    for (double v : row) o.push_back(std::log(v));
  }
  return out;
}

}  // namespace fdeig
