#include "fdeig/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "fdeig/error.hpp"

namespace fdeig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double polynomial_antiderivative(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i] / static_cast<double>(i + 1);
  return acc * x;
}

double polynomial_l1(std::span<const double> c) {
  if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) return 0.0;

  // Break [0,1] at the sign changes of p so each piece integrates exactly.
  const int samples = 256 * static_cast<int>(c.size() + 1);
  std::vector<double> breaks{0.0};
  double x_prev = 0.0;
  double p_prev = horner(c, x_prev);
  for (int i = 1; i <= samples; ++i) {
    const double x = static_cast<double>(i) / samples;
    const double p = horner(c, x);
    if (p_prev == 0.0) {
      if (x_prev > 0.0) breaks.push_back(x_prev);
    } else if (p != 0.0 && std::signbit(p) != std::signbit(p_prev)) {
      boost::uintmax_t iters = 100;
      auto root = boost::math::tools::toms748_solve(
          [&](double t) { return horner(c, t); }, x_prev, x, p_prev, p,
          boost::math::tools::eps_tolerance<double>(52), iters);
      breaks.push_back(0.5 * (root.first + root.second));
    }
    x_prev = x;
    p_prev = p;
  }
  breaks.push_back(1.0);

  double total = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i)
    total += std::abs(polynomial_antiderivative(c, breaks[i]) -
                      polynomial_antiderivative(c, breaks[i - 1]));
  return total;
}

double tabulated_l1(const TabulatedPotential& t) {
  // Split at the interface, the only place a declared singularity may sit.
  // With a declared singularity each half is integrated in tau = sqrt|x - 1/2|,
  // where |q| dx = 2 r(x) tau^(1 + 2 alpha) dtau and r is bounded.
  boost::math::quadrature::tanh_sinh<double> integrator(12);
  const double half_width = std::sqrt(kInterface);
  auto run = [&](auto&& f, double a, double b) {
    double err = 0.0;
    double l1 = 0.0;
    double value = 0.0;
    try {
      value = integrator.integrate(f, a, b, 1e-12, &err, &l1);
    } catch (const std::exception& e) {
      throw QuadratureFailure(std::string("L1 norm of tabulated potential did not converge: ") +
                              e.what());
    }
    if (!std::isfinite(value) || !std::isfinite(err) || err > 1e-6 * std::max(1.0, value))
      throw QuadratureFailure("L1 norm of tabulated potential did not converge on [" +
                              std::to_string(a) + ", " + std::to_string(b) + "]");
    return value;
  };

  if (!t.singularity) {
    auto f = [&](double x) { return std::abs(t.evaluate(x)); };
    return run(f, 0.0, kInterface) + run(f, kInterface, 1.0);
  }
  const double alpha = t.singularity->exponent;
  double total = 0.0;
  for (double side : {-1.0, 1.0}) {
    auto f = [&](double tau) {
      double x = kInterface + side * tau * tau;
      if (x == kInterface) x = std::nextafter(kInterface, kInterface + side);
      const double r = std::abs(t.evaluate(x)) * std::pow(std::abs(x - kInterface), -alpha);
      return 2.0 * r * std::pow(tau, 1.0 + 2.0 * alpha);
    };
    total += run(f, 0.0, half_width);
  }
  return total;
}

}  // namespace

PotentialSpec PotentialSpec::polynomial(std::vector<double> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  return PotentialSpec(PolynomialPotential{std::move(coeffs)});
}

PotentialSpec PotentialSpec::tabulated(std::function<double(double)> evaluate,
                                       std::optional<double> l1_norm,
                                       std::optional<Singularity> singularity) {
  if (!evaluate) throw DomainError("tabulated potential needs an evaluator");
  if (singularity && (singularity->exponent <= -1.0 || singularity->exponent >= 0.0))
    throw DomainError("singularity exponent must lie in (-1, 0)");
  if (singularity && singularity->location != kInterface)
    throw DomainError("singularities are only supported at the interface x = 1/2");
  return PotentialSpec(TabulatedPotential{std::move(evaluate), l1_norm, singularity});
}

double PotentialSpec::operator()(double x) const {
  return std::visit(overloaded{
                        [&](const PolynomialPotential& p) { return horner(p.coeffs, x); },
                        [&](const InverseSqrtHalfPotential&) {
                          return 1.0 / std::sqrt(std::abs(kInterface - x));
                        },
                        [&](const TabulatedPotential& t) { return t.evaluate(x); },
                    },
                    kind_);
}

double PotentialSpec::regular_factor(double x) const {
  const auto s = singularity();
  if (!s) return (*this)(x);
  if (std::holds_alternative<InverseSqrtHalfPotential>(kind_)) return 1.0;
  return (*this)(x) * std::pow(std::abs(x - s->location), -s->exponent);
}

std::optional<Singularity> PotentialSpec::singularity() const {
  return std::visit(overloaded{
                        [](const PolynomialPotential&) -> std::optional<Singularity> {
                          return std::nullopt;
                        },
                        [](const InverseSqrtHalfPotential&) -> std::optional<Singularity> {
                          return Singularity{kInterface, -0.5};
                        },
                        [](const TabulatedPotential& t) { return t.singularity; },
                    },
                    kind_);
}

bool PotentialSpec::is_zero() const {
  const auto* p = std::get_if<PolynomialPotential>(&kind_);
  return p != nullptr && p->coeffs.empty();
}

std::string PotentialSpec::describe() const {
  return std::visit(overloaded{
                        [](const PolynomialPotential& p) {
                          std::ostringstream os;
                          os << "polynomial[";
                          for (std::size_t i = 0; i < p.coeffs.size(); ++i)
                            os << (i ? "," : "") << p.coeffs[i];
                          os << "]";
                          return os.str();
                        },
                        [](const InverseSqrtHalfPotential&) {
                          return std::string("inverse_sqrt_half");
                        },
                        [](const TabulatedPotential&) { return std::string("tabulated"); },
                    },
                    kind_);
}

double l1_norm(const PotentialSpec& q) {
  return std::visit(overloaded{
                        [](const PolynomialPotential& p) { return polynomial_l1(p.coeffs); },
                        // 2 * int_0^{1/2} t^{-1/2} dt = 2 * 2 sqrt(1/2)
                        [](const InverseSqrtHalfPotential&) { return 2.0 * std::sqrt(2.0); },
                        [](const TabulatedPotential& t) {
                          return t.l1_norm ? *t.l1_norm : tabulated_l1(t);
                        },
                    },
                    q.kind());
}

NonlinearitySpec::NonlinearitySpec(std::vector<double> coeffs_from_degree_1)
    : coeffs_(std::move(coeffs_from_degree_1)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double NonlinearitySpec::coefficient(int i) const {
  if (i < 1 || i > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(i - 1)];
}

double NonlinearitySpec::operator()(double u) const { return u * horner(coeffs_, u); }

double NonlinearitySpec::derivative(double u) const {
  double acc = 0.0;
  for (int i = degree(); i >= 1; --i) acc = acc * u + i * coefficient(i);
  return acc;
}

double NonlinearitySpec::majorant(double u) const { return majorant_spec()(u); }

double NonlinearitySpec::majorant_derivative(double u) const {
  return majorant_spec().derivative(u);
}

NonlinearitySpec NonlinearitySpec::majorant_spec() const {
  std::vector<double> abs_coeffs(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), abs_coeffs.begin(),
                 [](double a) { return std::abs(a); });
  return NonlinearitySpec(std::move(abs_coeffs));
}

double eval_nonlinearity(const NonlinearitySpec& n, double u) { return n(u); }
double eval_majorant(const NonlinearitySpec& n, double u) { return n.majorant(u); }

BranchId BranchId::canonical() const {
  if (family == Family::I) {
    if (n < 0) throw InvalidBranch("family I requires n >= 0");
    if (sign != 1 && sign != -1) throw InvalidBranch("family I sign must be +1 or -1");
    return BranchId{Family::I, n == 0 ? 1 : sign, n};
  }
  if (n < 1) throw InvalidBranch("family II requires n >= 1");
  return BranchId{Family::II, 1, n};
}

std::string BranchId::tag() const {
  if (family == Family::II) return "II_" + std::to_string(n);
  return std::string("I_") + (sign > 0 ? "plus_" : "minus_") + std::to_string(n);
}

std::string BranchId::label() const {
  if (family == Family::II) return "II(n=" + std::to_string(n) + ")";
  return std::string("I(") + (sign > 0 ? "+" : "-") + ",n=" + std::to_string(n) + ")";
}

}  // namespace fdeig
