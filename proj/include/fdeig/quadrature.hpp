#pragma once

// Panel meshes, grid functions and the integration kernels behind the
// correction formulas.
//
// Each of the two panels [0,1/2] and [1/2,1] carries its own mesh of M (even)
// subintervals, indexed by a uniform parameter s = 0..M. A mesh is either
// uniform in x, or uniform in t = sqrt(|1/2 - x|) ("interface graded").

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fdeig/model.hpp"

namespace fdeig {

enum class Panel { left, right };
enum class Grading { uniform, interface_sqrt };

class PanelMesh {
 public:
  PanelMesh(Panel panel, int intervals, Grading grading);

  Panel panel() const { return panel_; }
  Grading grading() const { return grading_; }
  int intervals() const { return intervals_; }
  std::size_t size() const { return nodes_.size(); }
  double start() const { return nodes_.front(); }
  double end() const { return nodes_.back(); }

  std::span<const double> nodes() const { return nodes_; }
  /// dx/ds at each node.
  std::span<const double> jacobian() const { return jacobian_; }

  /// Fractional node index of x (inverse of the mesh map).
  double index_of(double x) const;
  double x_at(double s) const;

 private:
  Panel panel_;
  Grading grading_;
  int intervals_;
  std::vector<double> nodes_;
  std::vector<double> jacobian_;
};

using MeshPtr = std::shared_ptr<const PanelMesh>;

/// Node values of a function on one panel. Off-node evaluation uses cubic
/// Lagrange interpolation in the mesh parameter, so it never reads the other
/// panel.
class PanelFunction {
 public:
  PanelFunction() = default;
  PanelFunction(MeshPtr mesh, std::vector<double> values);

  static PanelFunction zeros(MeshPtr mesh);
  static PanelFunction sample(MeshPtr mesh, const std::function<double(double)>& f);

  const PanelMesh& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  double front() const { return values_.front(); }
  double back() const { return values_.back(); }

  double operator()(double x) const;
  double sup_norm() const;

  PanelFunction& operator+=(const PanelFunction& o);
  PanelFunction& operator-=(const PanelFunction& o);
  PanelFunction& operator*=(double c);
  PanelFunction& add_scaled(double c, const PanelFunction& o);

  friend PanelFunction operator+(PanelFunction a, const PanelFunction& b) { return a += b; }
  friend PanelFunction operator-(PanelFunction a, const PanelFunction& b) { return a -= b; }
  friend PanelFunction operator*(double c, PanelFunction a) { return a *= c; }
  /// Pointwise product.
  friend PanelFunction operator*(const PanelFunction& a, const PanelFunction& b);

 private:
  MeshPtr mesh_;
  std::vector<double> values_;
};

/// The pair of panel meshes a solve runs on.
struct Mesh {
  MeshPtr left;
  MeshPtr right;

  static Mesh make(int intervals, Grading grading);
  /// Interface-graded when the potential declares a singularity, else uniform.
  static Mesh for_potential(int intervals, const PotentialSpec& q);
  const MeshPtr& operator[](Panel p) const { return p == Panel::left ? left : right; }
};

/// A piecewise function on [0,1/2] u [1/2,1] with independent one-sided values
/// at the interface.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(PanelFunction left, PanelFunction right);

  static GridFunction zeros(const Mesh& mesh);
  static GridFunction sample(const Mesh& mesh, const std::function<double(double)>& left,
                             const std::function<double(double)>& right);

  const PanelFunction& left() const { return left_; }
  const PanelFunction& right() const { return right_; }
  PanelFunction& left() { return left_; }
  PanelFunction& right() { return right_; }
  const PanelFunction& operator[](Panel p) const { return p == Panel::left ? left_ : right_; }
  PanelFunction& operator[](Panel p) { return p == Panel::left ? left_ : right_; }

  /// x < 1/2 reads the left panel, x >= 1/2 the right one.
  double operator()(double x) const;
  /// max over panels of the nodal sup-norms.
  double sup_norm() const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& add_scaled(double c, const GridFunction& o);

 private:
  PanelFunction left_;
  PanelFunction right_;
};

/// A right-hand side split as F = smooth + q * weighted.
struct SplitField {
  PanelFunction smooth;
  PanelFunction weighted;

  /// F at the nodes. Throws SingularPotential if q is singular.
  PanelFunction pointwise(const PotentialSpec& q) const;
};

/// Running integral x -> int_{panel start}^x f. Composite Simpson on even
/// prefixes, Simpson 3/8 over the last three subintervals on odd ones; exact
/// for cubics in the mesh parameter.
PanelFunction cumulative_simpson(const PanelFunction& f);
/// Composite Simpson over the whole panel.
double integrate(const PanelFunction& f);

/// Running integral x -> int_{panel start}^x q g. For a potential with a
/// |1/2 - x|^{-1/2} singularity the integral is taken in t = sqrt(|1/2 - x|),
/// where q dx becomes 2 (regular factor) dt. Other exponents raise
/// UnsupportedWeight.
PanelFunction weighted_cumulative(const PanelFunction& g, const PotentialSpec& q);
double weighted_integral(const PanelFunction& g, const PotentialSpec& q);

PanelFunction cumulative(const SplitField& f, const PotentialSpec& q);
double integrate(const SplitField& f, const PotentialSpec& q);

enum class Direction { from_left, from_right };

struct KernelResult {
  PanelFunction value;
  PanelFunction derivative;
};

/// from_left:  x -> int_{start}^x sin(k (x - xi)) / k F(xi) dxi
/// from_right: x -> int_x^{end} sin(k (x - xi)) / k F(xi) dxi
/// with k = sqrt(lambda0), in O(M) by splitting the sine of a difference into
/// two running integrals. Throws DomainError for lambda0 <= 0.
KernelResult kernel_convolution(double lambda0, const SplitField& f, const PotentialSpec& q,
                                Direction direction);
PanelFunction kernel_convolution(double lambda0, const PanelFunction& f, Direction direction);

}  // namespace fdeig
