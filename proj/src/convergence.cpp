#include "fdeig/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "fdeig/basis.hpp"
#include "fdeig/error.hpp"
#include "fdeig/fdcore.hpp"

namespace fdeig {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

}  // namespace

ScalingConstants scaling_constants(const BranchId& branch) {
  const BranchId b = branch.canonical();
  if (b.family == Family::I) {
    const double k = std::sqrt(zero_eigenvalue(b));
    return {kSqrt3 * k / (2.0 + kSqrt3), 3.0 / (8.0 * k)};
  }
  const double pn = std::numbers::pi * b.n;
  return {pn, b.n % 2 == 0 ? 3.0 / (8.0 * pn) : 1.0 / (8.0 * pn)};
}

double MajorantState::term(int j) const {
  const double w = v.at(static_cast<std::size_t>(j));
  if (scale == 1.0 || w == 0.0) return w;
  return std::exp(std::log(w) - j * std::log(scale));
}

double MajorantState::mu_term(int j) const {
  const double w = mu.at(static_cast<std::size_t>(j));
  if (scale == 1.0 || w == 0.0) return w;
  return std::exp(std::log(w) - j * std::log(scale));
}

double radius_linear(double q_norm) {
  if (q_norm < 0.0) throw DomainError("q_norm must be non-negative");
  if (q_norm == 0.0) return kInfiniteRadius;
  return 1.0 / ((11.0 / 3.0) * q_norm * (1.0 + 16.0 / 3.0 + 2.0 * std::sqrt(88.0 / 9.0)));
}

double convergence_ratio(const BranchId& branch, double radius) {
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  if (std::isinf(radius)) return 0.0;
  const BranchId b = branch.canonical();
  if (b.family == Family::I)
    return (2.0 + kSqrt3) / (kSqrt3 * std::sqrt(zero_eigenvalue(b)) * radius);
  return 1.0 / (std::numbers::pi * b.n * radius);
}

MajorantState majorant_sequence(double q_norm, const NonlinearitySpec& majorant, int terms,
                                double scale) {
  if (terms < 1) throw DomainError("majorant_sequence needs J >= 1");
  if (q_norm < 0.0) throw DomainError("q_norm must be non-negative");
  if (!(scale > 0.0)) throw DomainError("scale must be positive");

  const NonlinearitySpec nbar = majorant.majorant_spec();
  MajorantState st;
  st.q_norm = q_norm;
  st.scale = scale;
  const double v0 = st.v0;
  st.v.reserve(static_cast<std::size_t>(terms) + 1);
  st.mu.reserve(static_cast<std::size_t>(terms) + 1);
  st.v.push_back(v0);
  st.mu.push_back(0.0);

  const double drive1 = q_norm * v0 + nbar.majorant_derivative(v0) * v0;
  st.mu.push_back(scale * drive1);
  st.v.push_back(scale * (1.0 + v0) * drive1);

  for (int j = 1; j < terms; ++j) {
    const double a = nbar.empty() ? 0.0 : adomian(nbar, st.v, j);
    double vv = 0.0;
    double mv = 0.0;
    for (int p = 1; p <= j; ++p) {
      const auto i = static_cast<std::size_t>(j + 1 - p);
      vv += st.v[i] * st.v[static_cast<std::size_t>(p)];
      mv += st.mu[i] * st.v[static_cast<std::size_t>(p)];
    }
    const double drive = scale * (q_norm * st.v[static_cast<std::size_t>(j)] + a);
    const double vn = vv + (1.0 + v0) * drive;
    const double mn = mv + drive;
    if (!std::isfinite(vn) || !std::isfinite(mn)) {
      st.saturated = true;
      break;
    }
    st.v.push_back(vn);
    st.mu.push_back(mn);
  }
  return st;
}

RadiusEstimate estimate_radius_nonlinear(const MajorantState& state) {
  const int J = state.terms();
  if (J < 10) throw DomainError("ratio test needs at least 10 majorant terms");
  RadiusEstimate est;
  est.terms = J;
  if (std::all_of(state.v.begin() + 1, state.v.end(), [](double w) { return w == 0.0; }))
    return est;

  const int window = std::max(5, J / 4);
  std::vector<double> idx;
  std::vector<double> ratio;
  for (int j = J - window; j < J; ++j) {
    const double a = state.v[static_cast<std::size_t>(j)];
    const double b = state.v[static_cast<std::size_t>(j + 1)];
    if (a <= 0.0 || b <= 0.0) continue;
    idx.push_back(j);
    ratio.push_back(a / b * state.scale);
  }
  if (ratio.empty()) return est;

  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  est.radius = *lo;
  est.lower = *lo;
  est.upper = *hi;
  const bool inc = std::is_sorted(ratio.begin(), ratio.end());
  const bool dec = std::is_sorted(ratio.rbegin(), ratio.rend());
  est.monotone = inc || dec;
  if (!est.monotone) {
    const double spread = est.upper - est.lower;
    est.lower = std::max(0.0, est.lower - spread);
    est.upper += spread;
  }

  // least squares ratio = R + c / j
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(ratio.size());
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    const double x = 1.0 / idx[i];
    sx += x;
    sy += ratio[i];
    sxx += x * x;
    sxy += x * ratio[i];
  }
  const double den = n * sxx - sx * sx;
  est.extrapolated = den != 0.0 ? (sy * sxx - sx * sxy) / den : est.radius;
  return est;
}

RadiusEstimate estimate_radius(double q_norm, const NonlinearitySpec& nonlinearity, int terms) {
  const auto probe = majorant_sequence(q_norm, nonlinearity, std::min(terms, 20));
  const int J = probe.terms();
  const double a = probe.v[static_cast<std::size_t>(J - 1)];
  const double b = probe.v[static_cast<std::size_t>(J)];
  const double scale = (a > 0.0 && b > 0.0) ? a / b : 1.0;
  return estimate_radius_nonlinear(majorant_sequence(q_norm, nonlinearity, terms, scale));
}

double branch_point_radius(double q_norm, const NonlinearitySpec& nonlinearity) {
  const NonlinearitySpec nbar = nonlinearity.majorant_spec();
  const double v0 = kMajorantStart;
  const double shift = nbar.majorant_derivative(v0) * v0 - nbar.majorant(v0);
  if (q_norm == 0.0 && nbar.empty()) return kInfiniteRadius;
  auto neg_z = [&](double f) {
    const double g = f - v0;
    const double den = (1.0 + v0) * (q_norm * f + nbar.majorant(f) + shift);
    return -(g - g * g) / den;
  };
  const auto [f, z] = boost::math::tools::brent_find_minima(neg_z, v0, v0 + 1.0, 52);
  (void)f;
  return -z;
}

DecayReport decay_report(double ratio, int m) {
  if (m < 0) throw DomainError("rank must be >= 0");
  DecayReport d;
  d.ratio = ratio;
  d.rank = m;
  d.factor = std::pow(ratio, m) / (m + 1);
  d.condition_satisfied = ratio < 1.0;
  if (d.condition_satisfied)
    d.note = "r < 1: error bounded by C * factor (C, eps unknown constants)";
  else if (ratio == 1.0)
    d.note = "r = 1: factor 1/(m+1) still decays (C, eps unknown constants)";
  else
    d.note = "condition not satisfied; empirical convergence may still occur (cf. residual tables)";
  return d;
}

ConvergenceReport convergence_report(const TransmissionProblem& problem, const BranchId& branch,
                                     int rank, int majorant_terms) {
  ConvergenceReport r;
  r.q_norm = l1_norm(problem.potential);
  if (problem.linear()) {
    r.radius = radius_linear(r.q_norm);
    r.radius_lower = r.radius_upper = r.radius;
    r.radius_method = "closed_form";
  } else {
    const auto est = estimate_radius(r.q_norm, problem.nonlinearity, majorant_terms);
    r.radius = est.radius;
    r.radius_lower = est.lower;
    r.radius_upper = est.upper;
    r.radius_method = "ratio_test";
  }
  r.scaling = scaling_constants(branch);
  r.ratio = convergence_ratio(branch, r.radius);
  r.condition_satisfied = r.ratio < 1.0;
  for (int m = 0; m <= rank; ++m) r.decay.push_back(decay_report(r.ratio, m));
  return r;
}

}  // namespace fdeig
