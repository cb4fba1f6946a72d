#include "fdeig/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "fdeig/error.hpp"

namespace fdeig {

namespace {

const double kHalfRoot = std::sqrt(0.5);  // t at the outer panel ends

void check_same_mesh(const PanelFunction& a, const PanelFunction& b) {
  if (a.mesh_ptr() == b.mesh_ptr()) return;
  if (a.size() != b.size() || a.mesh().panel() != b.mesh().panel() ||
      a.mesh().grading() != b.mesh().grading())
    throw Error("panel functions live on different meshes");
}

// Running composite rule over unit-spaced integrand samples.
std::vector<double> running_simpson(std::span<const double> f) {
  const std::size_t m = f.size() - 1;
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t k = 2; k <= m; k += 2)
    out[k] = out[k - 2] + (f[k - 2] + 4.0 * f[k - 1] + f[k]) / 3.0;
  // cubic through nodes 0..3 integrated over [0,1]
  out[1] = (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) / 24.0;
  for (std::size_t k = 3; k <= m; k += 2)
    out[k] = out[k - 3] + 0.375 * (f[k - 3] + 3.0 * f[k - 2] + 3.0 * f[k - 1] + f[k]);
  return out;
}

// q dx / ds at the nodes of an interface-graded mesh for a potential with a
// |1/2 - x|^{-1/2} singularity: 2 r(x) * sqrt(1/2) / M, r the regular factor.
std::vector<double> graded_singular_weight(const PanelMesh& mesh, const PotentialSpec& q) {
  const auto x = mesh.nodes();
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = q.regular_factor(x[i]);
  // The interface node may not be evaluable for tabulated potentials.
  const std::size_t iface = mesh.panel() == Panel::left ? x.size() - 1 : 0;
  if (!std::isfinite(r[iface])) {
    const int dir = mesh.panel() == Panel::left ? -1 : 1;
    auto at = [&](int k) { return r[static_cast<std::size_t>(static_cast<int>(iface) + dir * k)]; };
    r[iface] = 4.0 * at(1) - 6.0 * at(2) + 4.0 * at(3) - at(4);
  }
  const double scale = 2.0 * kHalfRoot / mesh.intervals();
  for (double& v : r) v *= scale;
  return r;
}

// Uniform mesh, singular weight: per-interval Gauss-Legendre in t with g
// interpolated from the nodes.
std::vector<double> uniform_singular_running(const PanelFunction& g, const PotentialSpec& q) {
  const auto& mesh = g.mesh();
  const auto x = mesh.nodes();
  const bool left = mesh.panel() == Panel::left;
  std::vector<double> out(x.size(), 0.0);
  auto integrand = [&](double t) {
    const double xi = left ? kInterface - t * t : kInterface + t * t;
    return 2.0 * q.regular_factor(xi) * g(xi);
  };
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double ta = std::sqrt(std::abs(kInterface - x[i]));
    const double tb = std::sqrt(std::abs(kInterface - x[i + 1]));
    const double piece =
        boost::math::quadrature::gauss<double, 7>::integrate(integrand, std::min(ta, tb), std::max(ta, tb));
    out[i + 1] = out[i] + piece;
  }
  return out;
}

void check_singularity(const Singularity& s) {
  if (s.exponent != -0.5)
    throw UnsupportedWeight("only |1/2 - x|^(-1/2) singular weights are supported, got exponent " +
                            std::to_string(s.exponent));
}

}  // namespace

PanelMesh::PanelMesh(Panel panel, int intervals, Grading grading)
    : panel_(panel), grading_(grading), intervals_(intervals) {
  if (intervals < 4 || intervals % 2 != 0)
    throw DomainError("panel mesh needs an even number of subintervals >= 4, got " +
                      std::to_string(intervals));
  nodes_.resize(static_cast<std::size_t>(intervals) + 1);
  jacobian_.resize(nodes_.size());
  for (int k = 0; k <= intervals; ++k) {
    nodes_[static_cast<std::size_t>(k)] = x_at(k);
    if (grading == Grading::uniform) {
      jacobian_[static_cast<std::size_t>(k)] = 0.5 / intervals;
    } else {
      const double t = panel == Panel::left ? kHalfRoot * (1.0 - static_cast<double>(k) / intervals)
                                            : kHalfRoot * static_cast<double>(k) / intervals;
      jacobian_[static_cast<std::size_t>(k)] = 2.0 * t * kHalfRoot / intervals;
    }
  }
  nodes_.front() = panel == Panel::left ? 0.0 : kInterface;
  nodes_.back() = panel == Panel::left ? kInterface : 1.0;
}

double PanelMesh::x_at(double s) const {
  const double frac = s / intervals_;
  if (grading_ == Grading::uniform)
    return panel_ == Panel::left ? 0.5 * frac : kInterface + 0.5 * frac;
  if (panel_ == Panel::left) {
    const double t = kHalfRoot * (1.0 - frac);
    return kInterface - t * t;
  }
  const double t = kHalfRoot * frac;
  return kInterface + t * t;
}

double PanelMesh::index_of(double x) const {
  if (grading_ == Grading::uniform)
    return (panel_ == Panel::left ? x : x - kInterface) * 2.0 * intervals_;
  const double t = std::sqrt(std::max(0.0, std::abs(kInterface - x)));
  return panel_ == Panel::left ? intervals_ * (1.0 - t / kHalfRoot) : intervals_ * t / kHalfRoot;
}

PanelFunction::PanelFunction(MeshPtr mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (!mesh_ || values_.size() != mesh_->size())
    throw Error("panel function size does not match its mesh");
}

PanelFunction PanelFunction::zeros(MeshPtr mesh) {
  const std::size_t n = mesh->size();
  return PanelFunction(std::move(mesh), std::vector<double>(n, 0.0));
}

PanelFunction PanelFunction::sample(MeshPtr mesh, const std::function<double(double)>& f) {
  std::vector<double> v(mesh->size());
  const auto x = mesh->nodes();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(x[i]);
  return PanelFunction(std::move(mesh), std::move(v));
}

double PanelFunction::operator()(double x) const {
  const int m = mesh_->intervals();
  const double s = std::clamp(mesh_->index_of(x), 0.0, static_cast<double>(m));
  const int i0 = std::clamp(static_cast<int>(std::floor(s)) - 1, 0, m - 3);
  const double d = s - i0;
  // Lagrange basis on nodes 0,1,2,3 at offset d
  const double w0 = -(d - 1.0) * (d - 2.0) * (d - 3.0) / 6.0;
  const double w1 = d * (d - 2.0) * (d - 3.0) / 2.0;
  const double w2 = -d * (d - 1.0) * (d - 3.0) / 2.0;
  const double w3 = d * (d - 1.0) * (d - 2.0) / 6.0;
  const auto* v = values_.data() + i0;
  return w0 * v[0] + w1 * v[1] + w2 * v[2] + w3 * v[3];
}

double PanelFunction::sup_norm() const {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

PanelFunction& PanelFunction::operator+=(const PanelFunction& o) { return add_scaled(1.0, o); }
PanelFunction& PanelFunction::operator-=(const PanelFunction& o) { return add_scaled(-1.0, o); }

PanelFunction& PanelFunction::operator*=(double c) {
  for (double& v : values_) v *= c;
  return *this;
}

PanelFunction& PanelFunction::add_scaled(double c, const PanelFunction& o) {
  check_same_mesh(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += c * o.values_[i];
  return *this;
}

PanelFunction operator*(const PanelFunction& a, const PanelFunction& b) {
  check_same_mesh(a, b);
  PanelFunction out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
  return out;
}

Mesh Mesh::make(int intervals, Grading grading) {
  return Mesh{std::make_shared<const PanelMesh>(Panel::left, intervals, grading),
              std::make_shared<const PanelMesh>(Panel::right, intervals, grading)};
}

Mesh Mesh::for_potential(int intervals, const PotentialSpec& q) {
  return make(intervals, q.singularity() ? Grading::interface_sqrt : Grading::uniform);
}

GridFunction::GridFunction(PanelFunction left, PanelFunction right)
    : left_(std::move(left)), right_(std::move(right)) {}

GridFunction GridFunction::zeros(const Mesh& mesh) {
  return GridFunction(PanelFunction::zeros(mesh.left), PanelFunction::zeros(mesh.right));
}

GridFunction GridFunction::sample(const Mesh& mesh, const std::function<double(double)>& left,
                                  const std::function<double(double)>& right) {
  return GridFunction(PanelFunction::sample(mesh.left, left), PanelFunction::sample(mesh.right, right));
}

double GridFunction::operator()(double x) const { return x < kInterface ? left_(x) : right_(x); }

double GridFunction::sup_norm() const { return std::max(left_.sup_norm(), right_.sup_norm()); }

GridFunction& GridFunction::operator+=(const GridFunction& o) { return add_scaled(1.0, o); }

GridFunction& GridFunction::add_scaled(double c, const GridFunction& o) {
  left_.add_scaled(c, o.left_);
  right_.add_scaled(c, o.right_);
  return *this;
}

PanelFunction SplitField::pointwise(const PotentialSpec& q) const {
  if (q.singularity())
    throw SingularPotential("pointwise right-hand side is undefined for a singular potential");
  PanelFunction out = smooth;
  const auto x = smooth.mesh().nodes();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += q(x[i]) * weighted[i];
  return out;
}

PanelFunction cumulative_simpson(const PanelFunction& f) {
  const auto jac = f.mesh().jacobian();
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) integrand[i] = f[i] * jac[i];
  return PanelFunction(f.mesh_ptr(), running_simpson(integrand));
}

double integrate(const PanelFunction& f) {
  const auto jac = f.mesh().jacobian();
  const std::size_t m = f.size() - 1;
  double acc = f[0] * jac[0] + f[m] * jac[m];
  for (std::size_t i = 1; i < m; ++i) acc += (i % 2 ? 4.0 : 2.0) * f[i] * jac[i];
  return acc / 3.0;
}

PanelFunction weighted_cumulative(const PanelFunction& g, const PotentialSpec& q) {
  const auto& mesh = g.mesh();
  const auto sing = q.singularity();
  if (!sing) {
    const auto x = mesh.nodes();
    PanelFunction qg = g;
    for (std::size_t i = 0; i < qg.size(); ++i) qg[i] *= q(x[i]);
    return cumulative_simpson(qg);
  }
  check_singularity(*sing);
  if (mesh.grading() == Grading::uniform)
    return PanelFunction(g.mesh_ptr(), uniform_singular_running(g, q));
  auto w = graded_singular_weight(mesh, q);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= g[i];
  return PanelFunction(g.mesh_ptr(), running_simpson(w));
}

double weighted_integral(const PanelFunction& g, const PotentialSpec& q) {
  const auto sing = q.singularity();
  if (!sing || g.mesh().grading() == Grading::uniform) return weighted_cumulative(g, q).back();
  check_singularity(*sing);
  const auto w = graded_singular_weight(g.mesh(), q);
  const std::size_t m = g.size() - 1;
  double acc = g[0] * w[0] + g[m] * w[m];
  for (std::size_t i = 1; i < m; ++i) acc += (i % 2 ? 4.0 : 2.0) * g[i] * w[i];
  return acc / 3.0;
}

PanelFunction cumulative(const SplitField& f, const PotentialSpec& q) {
  return cumulative_simpson(f.smooth) + weighted_cumulative(f.weighted, q);
}

double integrate(const SplitField& f, const PotentialSpec& q) {
  return integrate(f.smooth) + weighted_integral(f.weighted, q);
}

KernelResult kernel_convolution(double lambda0, const SplitField& f, const PotentialSpec& q,
                                Direction direction) {
  if (!(lambda0 > 0.0)) throw DomainError("kernel convolution needs lambda0 > 0");
  const double k = std::sqrt(lambda0);
  const auto& mesh = f.smooth.mesh_ptr();
  const auto cos_kx = PanelFunction::sample(mesh, [k](double x) { return std::cos(k * x); });
  const auto sin_kx = PanelFunction::sample(mesh, [k](double x) { return std::sin(k * x); });

  // C(x) = int cos(k xi) F, S(x) = int sin(k xi) F, both from the panel start.
  PanelFunction c = cumulative(SplitField{cos_kx * f.smooth, cos_kx * f.weighted}, q);
  PanelFunction s = cumulative(SplitField{sin_kx * f.smooth, sin_kx * f.weighted}, q);
  if (direction == Direction::from_right) {
    const double c_end = c.back();
    const double s_end = s.back();
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = c_end - c[i];
      s[i] = s_end - s[i];
    }
  }
  KernelResult out{PanelFunction::zeros(mesh), PanelFunction::zeros(mesh)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.value[i] = (sin_kx[i] * c[i] - cos_kx[i] * s[i]) / k;
    out.derivative[i] = cos_kx[i] * c[i] + sin_kx[i] * s[i];
  }
  return out;
}

PanelFunction kernel_convolution(double lambda0, const PanelFunction& f, Direction direction) {
  const SplitField field{f, PanelFunction::zeros(f.mesh_ptr())};
  return kernel_convolution(lambda0, field, PotentialSpec::zero(), direction).value;
}

}  // namespace fdeig
