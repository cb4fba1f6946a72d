#pragma once

// Problem definition for the transmission eigenvalue problem
//
//   u'' + (lambda - q(x)) u - N(u) = 0   on (0, 1/2) and (1/2, 1),
//   u1(0) = u2(1) = 0,  u1'(0) = 1,
//   [u(1/2)] = 0,  [u'(1/2)] = 1,
//
// where [f] = f2 - f1. The boundary and jump data are fixed by the
// formulation and are not configurable.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fdeig {

inline constexpr double kInterface = 0.5;

/// Algebraic singularity |x - location|^exponent declared by a potential.
struct Singularity {
  double location = kInterface;
  double exponent = -0.5;
};

/// q(x) = c0 + c1 x + ... + cd x^d.
struct PolynomialPotential {
  std::vector<double> coeffs;
};

/// q(x) = |1/2 - x|^(-1/2).
struct InverseSqrtHalfPotential {};

/// A user supplied evaluator. Either the L1 norm is given, or it is computed
/// by adaptive quadrature (which may fail for non-integrable samples).
struct TabulatedPotential {
  std::function<double(double)> evaluate;
  std::optional<double> l1_norm;
  std::optional<Singularity> singularity;
};

class PotentialSpec {
 public:
  using Kind = std::variant<PolynomialPotential, InverseSqrtHalfPotential, TabulatedPotential>;

  PotentialSpec() : kind_(PolynomialPotential{}) {}
  explicit PotentialSpec(Kind kind) : kind_(std::move(kind)) {}

  static PotentialSpec zero() { return PotentialSpec{}; }
  static PotentialSpec polynomial(std::vector<double> coeffs);
  static PotentialSpec constant(double c) { return polynomial({c}); }
  static PotentialSpec inverse_sqrt_half() { return PotentialSpec(InverseSqrtHalfPotential{}); }
  static PotentialSpec tabulated(std::function<double(double)> evaluate,
                                 std::optional<double> l1_norm = std::nullopt,
                                 std::optional<Singularity> singularity = std::nullopt);

  /// Undefined (infinite) at a declared singular point.
  double operator()(double x) const;

  /// q(x) * |x - 1/2|^(-exponent): the bounded factor left after removing the
  /// declared singularity. Only meaningful when singularity() is set.
  double regular_factor(double x) const;

  std::optional<Singularity> singularity() const;
  bool is_zero() const;
  const Kind& kind() const { return kind_; }
  std::string describe() const;

 private:
  Kind kind_;
};

/// Power series N(u) = sum_{i>=1} a_i u^i truncated at a finite degree.
/// coeffs()[0] is a_1, so N(0) = 0 by construction.
class NonlinearitySpec {
 public:
  NonlinearitySpec() = default;
  explicit NonlinearitySpec(std::vector<double> coeffs_from_degree_1);

  static NonlinearitySpec none() { return {}; }
  static NonlinearitySpec square() { return NonlinearitySpec({0.0, 1.0}); }

  bool empty() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  std::span<const double> coeffs() const { return coeffs_; }
  /// a_i for i >= 1; zero beyond the truncation degree.
  double coefficient(int i) const;

  double operator()(double u) const;
  double derivative(double u) const;
  /// Majorant N̄(u) = sum |a_i| u^i.
  double majorant(double u) const;
  double majorant_derivative(double u) const;
  NonlinearitySpec majorant_spec() const;

 private:
  std::vector<double> coeffs_;
};

enum class Family { I, II };

/// Selects the zero approximation the recursion is built on.
///   family I:  lambda0 = 4 pi^2 (sign 2/3 + 2n)^2, n >= 0
///   family II: lambda0 = 4 pi^2 n^2,               n >= 1
struct BranchId {
  Family family = Family::I;
  int sign = 1;
  int n = 0;

  /// Throws InvalidBranch on an impossible combination. Family I with n = 0
  /// is mapped to sign +1; family II always carries sign +1.
  BranchId canonical() const;
  std::string tag() const;
  std::string label() const;

  friend bool operator==(const BranchId&, const BranchId&) = default;
};

struct TransmissionProblem {
  PotentialSpec potential;
  NonlinearitySpec nonlinearity;

  bool linear() const { return nonlinearity.empty(); }
};

/// ||q||_{L1(0,1)}. Analytic for the built-in kinds; adaptive quadrature for
/// tabulated potentials without a declared norm (QuadratureFailure if that
/// does not converge).
double l1_norm(const PotentialSpec& q);

double eval_nonlinearity(const NonlinearitySpec& n, double u);
double eval_majorant(const NonlinearitySpec& n, double u);

}  // namespace fdeig
