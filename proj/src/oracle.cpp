#include "fdeig/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "fdeig/error.hpp"

namespace fdeig {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

}  // namespace

ShotResult shoot(const TransmissionProblem& problem, double lambda, double tol) {
  if (problem.potential.singularity())
    throw SingularPotential(
        "shooting needs a potential smooth on each panel; validate singular problems with "
        "the integrated residual");
  if (!(tol > 0.0)) throw DomainError("shooting tolerance must be positive");

  const auto& q = problem.potential;
  const auto& n = problem.nonlinearity;
  auto rhs = [&](const State& y, State& dy, double x) {
    dy[0] = y[1];
    dy[1] = (q(x) - lambda) * y[0] + (n.empty() ? 0.0 : n(y[0]));
  };

  ShotResult shot;
  auto observe = [&](const State& y, double x) {
    shot.trajectory.push_back({x, y[0], y[1]});
    ++shot.steps;
  };
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>());

  State y{0.0, 1.0};
  try {
    odeint::integrate_adaptive(stepper, rhs, y, 0.0, kInterface, 1e-3, observe);
    y[1] += 1.0;
    shot.trajectory.push_back({kInterface, y[0], y[1]});
    odeint::integrate_adaptive(stepper, rhs, y, kInterface, 1.0, 1e-3, observe);
  } catch (const std::exception& e) {
    throw IntegrationFailure(std::string("shooting integration failed: ") + e.what());
  }
  shot.steps -= 2;  // the observer also sees both start points
  if (!std::isfinite(y[0])) throw IntegrationFailure("shooting produced a non-finite value");
  shot.miss = y[0];
  return shot;
}

double find_eigenvalue(const TransmissionProblem& problem, double lo, double hi, double tol) {
  if (!(lo < hi)) throw BracketError("bracket must satisfy lo < hi");
  auto miss = [&](double l) { return shoot(problem, l, tol).miss; };
  const double flo = miss(lo);
  const double fhi = miss(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw BracketError("miss has the same sign at both ends of [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      miss, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (a + b);
}

double find_eigenvalue_near(const TransmissionProblem& problem, double guess, double tol,
                            double max_halfwidth) {
  auto miss = [&](double l) { return shoot(problem, l, tol).miss; };
  for (double d = 1e-4 * std::max(1.0, std::abs(guess)); d <= max_halfwidth; d *= 2.0) {
    const double lo = guess - d;
    const double hi = guess + d;
    if ((miss(lo) > 0.0) != (miss(hi) > 0.0)) return find_eigenvalue(problem, lo, hi, tol);
  }
  throw BracketError("no sign change of the miss within " + std::to_string(max_halfwidth) +
                     " of " + std::to_string(guess));
}

}  // namespace fdeig
