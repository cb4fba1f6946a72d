#include "fdeig/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdeig/error.hpp"

namespace fdeig {

namespace {
constexpr double pi = std::numbers::pi;

double sqrt_lambda0(const BranchId& b) {
  if (b.family == Family::I) return 2.0 * pi * std::abs(b.sign * 2.0 / 3.0 + 2.0 * b.n);
  return 2.0 * pi * b.n;
}
}  // namespace

double ZeroApproximation::u1(double x) const { return std::sin(k * x) / k; }
double ZeroApproximation::du1(double x) const { return std::cos(k * x); }
double ZeroApproximation::u2(double x) const { return c2 * std::sin(k * (1.0 - x)); }
double ZeroApproximation::du2(double x) const { return -c2 * k * std::cos(k * (1.0 - x)); }

double MatchingDefects::max() const {
  return std::max({u1_at_0, slope_at_0, u2_at_1, value_jump, flux_jump});
}

double zero_eigenvalue(const BranchId& branch) {
  const double k = sqrt_lambda0(branch.canonical());
  return k * k;
}

ZeroApproximation zero_eigenfunction(const BranchId& branch) {
  ZeroApproximation z;
  z.branch = branch.canonical();
  z.k = sqrt_lambda0(z.branch);
  z.lambda0 = z.k * z.k;
  if (z.branch.family == Family::I) {
    z.c2 = 1.0 / z.k;
  } else {
    // ((-1)^n + 1)/(2 pi n) sin(2 pi n x) written as c2 sin(k (1 - x)); zero for odd n.
    z.c2 = (z.branch.n % 2 == 0) ? -2.0 / z.k : 0.0;
  }
  return z;
}

MatchingDefects check_matching(const ZeroApproximation& z) {
  MatchingDefects d;
  d.u1_at_0 = std::abs(z.u1(0.0));
  d.slope_at_0 = std::abs(z.du1(0.0) - 1.0);
  d.u2_at_1 = std::abs(z.u2(1.0));
  d.value_jump = std::abs(z.u2(kInterface) - z.u1(kInterface));
  d.flux_jump = std::abs(z.du2(kInterface) - z.du1(kInterface) - 1.0);
  return d;
}

std::vector<BranchId> ascending_branches(int count) {
  std::vector<BranchId> all;
  // Family I contributes two branches per n (one at n = 0), family II one.
  const int span = count + 1;
  for (int n = 0; n <= span; ++n) {
    all.push_back(BranchId{Family::I, 1, n});
    if (n > 0) {
      all.push_back(BranchId{Family::I, -1, n});
      all.push_back(BranchId{Family::II, 1, n});
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const BranchId& a, const BranchId& b) {
    return zero_eigenvalue(a) < zero_eigenvalue(b);
  });
  all.resize(static_cast<std::size_t>(std::max(count, 0)));
  return all;
}

}  // namespace fdeig
