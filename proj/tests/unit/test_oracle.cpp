#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../reference_tables.hpp"
#include "fdeig/error.hpp"
#include "fdeig/fdcore.hpp"
#include "fdeig/oracle.hpp"
#include "generators.hpp"

using namespace fdeig;
using std::numbers::pi;

namespace {

double closed_form_miss(double lambda) {
  const double k = std::sqrt(lambda);
  return (std::sin(k) + std::sin(k / 2.0)) / k;
}

}  // namespace

TEST_CASE("shooting the unperturbed problem") {
  const TransmissionProblem p{};
  CHECK(std::abs(shoot(p, 16.0 * pi * pi / 9.0).miss) < 1e-10);
  CHECK(shoot(p, pi * pi).miss == doctest::Approx(1.0 / pi).epsilon(1e-10));
  CHECK(std::abs(shoot(p, 4.0 * pi * pi).miss) < 1e-10);

  const auto shot = shoot(p, 20.0);
  CHECK(shot.steps > 0);
  CHECK(shot.trajectory.front().x == 0.0);
  CHECK(shot.trajectory.back().x == doctest::Approx(1.0));

  testing::Gen gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const double l = gen.uniform(1.0, 400.0);
    CHECK(std::abs(shoot(p, l).miss - closed_form_miss(l)) <= 1e-10);
  }
}

TEST_CASE("eigenvalue root finding") {
  const TransmissionProblem p{};
  CHECK(std::abs(find_eigenvalue(p, 15.0, 20.0) - 16.0 * pi * pi / 9.0) <= 1e-10);
  CHECK_THROWS_AS(find_eigenvalue(p, 20.0, 25.0), BracketError);
  CHECK_THROWS_AS(find_eigenvalue(p, 25.0, 20.0), BracketError);
  CHECK(std::abs(find_eigenvalue_near(p, 39.0) - 4.0 * pi * pi) <= 1e-10);
}

TEST_CASE("shooting refuses singular potentials") {
  CHECK_THROWS_AS(shoot(reference::problem2(), 20.0), SingularPotential);
  CHECK_THROWS_AS(shoot(TransmissionProblem{}, 20.0, 0.0), DomainError);
}

TEST_CASE("linearised smooth problem agrees with rank 8") {
  const TransmissionProblem p{PotentialSpec::polynomial({0.0, 1.0, 3.0}), {}};
  const double oracle = find_eigenvalue(p, 18.0, 22.0);
  const double fd = fd_solve(p, {Family::I, 1, 0}, {8, 2048}).eigenvalue();
  CHECK(std::abs(oracle - fd) <= 1e-8);
}

TEST_CASE("nonlinear smooth problem") {
  const auto p = reference::problem1();
  const double oracle = find_eigenvalue(p, 18.0, 22.0);
  CHECK(std::abs(oracle - fd_solve(p, {Family::I, 1, 0}, {8, 2048}).eigenvalue()) <= 1e-8);
  // the rank-4 reference value carries its own truncation error (~4e-6)
  CHECK(std::abs(oracle - 19.6754786167117) <= 1e-5);
}

TEST_CASE("halving the integrator tolerance moves the root by far less than 1e-6") {
  const auto p = reference::problem1();
  const double a = find_eigenvalue(p, 18.0, 22.0, 1e-10);
  const double b = find_eigenvalue(p, 18.0, 22.0, 5e-11);
  CHECK(std::abs(a - b) < 1e-8);
}
