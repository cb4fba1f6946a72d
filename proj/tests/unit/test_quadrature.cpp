#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fdeig/error.hpp"
#include "fdeig/quadrature.hpp"
#include "generators.hpp"

using namespace fdeig;

namespace {

MeshPtr uniform(Panel p, int m) { return std::make_shared<PanelMesh>(p, m, Grading::uniform); }
MeshPtr graded(Panel p, int m) { return std::make_shared<PanelMesh>(p, m, Grading::interface_sqrt); }

// O(M^2) reference: every node gets its own quadrature of the full kernel.
KernelResult naive_convolution(double lambda0, const PanelFunction& f, Direction dir) {
  const double k = std::sqrt(lambda0);
  const auto x = f.mesh().nodes();
  KernelResult out{PanelFunction::zeros(f.mesh_ptr()), PanelFunction::zeros(f.mesh_ptr())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    PanelFunction gv = PanelFunction::zeros(f.mesh_ptr());
    PanelFunction gd = PanelFunction::zeros(f.mesh_ptr());
    for (std::size_t j = 0; j < x.size(); ++j) {
      gv[j] = std::sin(k * (x[i] - x[j])) / k * f[j];
      gd[j] = std::cos(k * (x[i] - x[j])) * f[j];
    }
    const auto cv = cumulative_simpson(gv);
    const auto cd = cumulative_simpson(gd);
    if (dir == Direction::from_left) {
      out.value[i] = cv[i];
      out.derivative[i] = cd[i];
    } else {
      out.value[i] = cv.back() - cv[i];
      out.derivative[i] = cd.back() - cd[i];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("panel meshes") {
  const PanelMesh l(Panel::left, 8, Grading::uniform);
  CHECK(l.start() == 0.0);
  CHECK(l.end() == 0.5);
  CHECK(l.nodes()[4] == doctest::Approx(0.25));
  const PanelMesh g(Panel::right, 8, Grading::interface_sqrt);
  CHECK(g.start() == 0.5);
  CHECK(g.end() == 1.0);
  CHECK(g.nodes()[4] == doctest::Approx(0.625));
  CHECK(g.index_of(g.nodes()[3]) == doctest::Approx(3.0));
  CHECK(g.x_at(5.0) == doctest::Approx(g.nodes()[5]));
  const PanelMesh gl(Panel::left, 8, Grading::interface_sqrt);
  CHECK(gl.end() == 0.5);
  CHECK(gl.nodes()[4] == doctest::Approx(0.375));
  CHECK_THROWS_AS(PanelMesh(Panel::left, 7, Grading::uniform), DomainError);
  CHECK_THROWS_AS(PanelMesh(Panel::left, 2, Grading::uniform), DomainError);
}

TEST_CASE("panel function arithmetic and interpolation") {
  const auto m = uniform(Panel::left, 16);
  const auto f = PanelFunction::sample(m, [](double x) { return x * x * x - x; });
  CHECK(f(0.123) == doctest::Approx(0.123 * 0.123 * 0.123 - 0.123).epsilon(1e-14));
  const auto g = PanelFunction::sample(m, [](double x) { return 2.0 * x; });
  const auto h = f + 3.0 * g;
  CHECK(h[5] == doctest::Approx(f[5] + 3.0 * g[5]));
  CHECK((f * g)[7] == doctest::Approx(f[7] * g[7]));
  CHECK(g.sup_norm() == doctest::Approx(1.0));
  const auto other = PanelFunction::zeros(uniform(Panel::left, 32));
  CHECK_THROWS_AS(f + other, Error);
  // equal meshes behind different pointers combine
  CHECK_NOTHROW(f + PanelFunction::zeros(uniform(Panel::left, 16)));
}

TEST_CASE("grid function reads the correct panel") {
  const auto mesh = Mesh::make(8, Grading::uniform);
  const auto u = GridFunction::sample(mesh, [](double) { return 1.0; }, [](double) { return 2.0; });
  CHECK(u(0.25) == 1.0);
  CHECK(u(0.5) == 2.0);
  CHECK(u(0.75) == 2.0);
  CHECK(u.sup_norm() == 2.0);
}

TEST_CASE("cumulative Simpson is exact for cubics on every prefix") {
  const auto m = uniform(Panel::right, 10);
  const auto f = PanelFunction::sample(m, [](double x) { return 1.0 + x - 2.0 * x * x + x * x * x; });
  const auto F = [](double x) { return x + x * x / 2.0 - 2.0 * x * x * x / 3.0 + x * x * x * x / 4.0; };
  const auto c = cumulative_simpson(f);
  const auto x = m->nodes();
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(c[i] == doctest::Approx(F(x[i]) - F(0.5)).epsilon(1e-14));
}

TEST_CASE("fourth-order convergence") {
  auto f = [](double x) { return std::sin(3.0 * x) * std::exp(x); };
  const double exact = [] {
    auto F = [](double x) { return std::exp(x) * (std::sin(3.0 * x) - 3.0 * std::cos(3.0 * x)) / 10.0; };
    return F(0.5) - F(0.0);
  }();
  double prev = 0.0;
  for (int m : {8, 16, 32, 64}) {
    const double err = std::abs(integrate(PanelFunction::sample(uniform(Panel::left, m), f)) - exact);
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(16.0).epsilon(0.1));
    prev = err;
  }
  // graded meshes keep the order for smooth integrands too
  prev = 0.0;
  for (int m : {16, 32, 64, 128}) {
    const double err = std::abs(integrate(PanelFunction::sample(graded(Panel::left, m), f)) - exact);
    if (prev > 0.0) CHECK(prev / err > 12.0);
    prev = err;
  }
}

TEST_CASE("weighted integrals with the interface singularity") {
  const auto q = PotentialSpec::inverse_sqrt_half();
  for (auto grading : {Grading::interface_sqrt, Grading::uniform}) {
    const auto mesh = Mesh::make(64, grading);
    const auto one_l = PanelFunction::sample(mesh.left, [](double) { return 1.0; });
    const auto one_r = PanelFunction::sample(mesh.right, [](double) { return 1.0; });
    const auto cl = weighted_cumulative(one_l, q);
    const auto cr = weighted_cumulative(one_r, q);
    const double s = std::sqrt(0.5);
    for (std::size_t i = 0; i < cl.size(); ++i) {
      const double xl = mesh.left->nodes()[i];
      const double xr = mesh.right->nodes()[i];
      CHECK(cl[i] == doctest::Approx(2.0 * (s - std::sqrt(0.5 - xl))).epsilon(1e-12));
      CHECK(cr[i] == doctest::Approx(2.0 * std::sqrt(xr - 0.5)).epsilon(1e-12));
    }
  }

  // references in t = sqrt|x - 1/2|, where the weight becomes 2 dt
  boost::math::quadrature::tanh_sinh<double> ts;
  auto g = [](double x) { return std::cos(5.0 * x) + x * x; };
  const double T = std::sqrt(0.5);
  const double ref_l = ts.integrate([&](double t) { return 2.0 * g(0.5 - t * t); }, 0.0, T);
  const double ref_r = ts.integrate([&](double t) { return 2.0 * g(0.5 + t * t); }, 0.0, T);
  const auto mesh = Mesh::make(1024, Grading::interface_sqrt);
  CHECK(std::abs(weighted_integral(PanelFunction::sample(mesh.left, g), q) - ref_l) <= 1e-11);
  CHECK(std::abs(weighted_integral(PanelFunction::sample(mesh.right, g), q) - ref_r) <= 1e-11);
  const auto um = Mesh::make(1024, Grading::uniform);
  CHECK(std::abs(weighted_integral(PanelFunction::sample(um.left, g), q) - ref_l) <= 1e-9);
  CHECK(std::abs(weighted_integral(PanelFunction::sample(um.right, g), q) - ref_r) <= 1e-9);
}

TEST_CASE("unsupported singular exponents are rejected") {
  const auto q = PotentialSpec::tabulated([](double x) { return std::pow(std::abs(0.5 - x), -0.25); },
                                          std::nullopt, Singularity{0.5, -0.25});
  const auto f = PanelFunction::zeros(uniform(Panel::left, 8));
  CHECK_THROWS_AS(weighted_cumulative(f, q), UnsupportedWeight);
  const SplitField s{f, f};
  CHECK_THROWS_AS(s.pointwise(PotentialSpec::inverse_sqrt_half()), SingularPotential);
}

TEST_CASE("kernel convolution matches the O(M^2) double loop") {
  testing::Gen gen(20240611);
  const auto zero = PotentialSpec::zero();
  for (int trial = 0; trial < 20; ++trial) {
    const double lambda0 = gen.uniform(1.0, 400.0);
    const double a = gen.uniform(-2, 2), b = gen.uniform(-5, 5), c = gen.uniform(0, 3);
    auto f = [&](double x) { return a + std::sin(b * x + c) + a * x * x; };
    for (Panel p : {Panel::left, Panel::right}) {
      for (auto grading : {Grading::uniform, Grading::interface_sqrt}) {
        const auto mesh = std::make_shared<PanelMesh>(p, 64, grading);
        const auto fv = PanelFunction::sample(mesh, f);
        for (auto dir : {Direction::from_left, Direction::from_right}) {
          const auto fast = kernel_convolution(lambda0, SplitField{fv, PanelFunction::zeros(mesh)}, zero, dir);
          const auto slow = naive_convolution(lambda0, fv, dir);
          for (std::size_t i = 0; i < fv.size(); ++i) {
            CHECK(std::abs(fast.value[i] - slow.value[i]) <= 1e-12);
            CHECK(std::abs(fast.derivative[i] - slow.derivative[i]) <= 1e-12);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(kernel_convolution(0.0, PanelFunction::zeros(uniform(Panel::left, 8)), Direction::from_left),
                  DomainError);
}

TEST_CASE("kernel convolution solves v'' + k^2 v = F") {
  // F = 1 from the left: v = (1 - cos(k x)) / k^2
  const double lambda0 = 30.0;
  const double k = std::sqrt(lambda0);
  const auto mesh = uniform(Panel::left, 256);
  const auto v = kernel_convolution(lambda0, PanelFunction::sample(mesh, [](double) { return 1.0; }),
                                    Direction::from_left);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = mesh->nodes()[i];
    CHECK(v[i] == doctest::Approx((1.0 - std::cos(k * x)) / lambda0).epsilon(1e-10));
  }
}

TEST_CASE("singular weighted integral converges at fourth order under mesh doubling") {
  const auto q = PotentialSpec::inverse_sqrt_half();
  auto g = [](double x) { return std::exp(x) * std::sin(4.0 * x); };
  for (Panel p : {Panel::left, Panel::right}) {
    std::vector<double> v;
    for (int m : {16, 32, 64, 128}) v.push_back(weighted_integral(PanelFunction::sample(graded(p, m), g), q));
    const double r1 = (v[0] - v[1]) / (v[1] - v[2]);
    const double r2 = (v[1] - v[2]) / (v[2] - v[3]);
    CHECK(r1 == doctest::Approx(16.0).epsilon(0.15));
    CHECK(r2 == doctest::Approx(16.0).epsilon(0.15));
  }
}

TEST_CASE("smooth integrals follow the Richardson factor") {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  std::vector<double> v;
  for (int m : {8, 16, 32, 64}) v.push_back(integrate(PanelFunction::sample(uniform(Panel::right, m), f)));
  CHECK((v[1] - v[2]) / (v[2] - v[3]) == doctest::Approx(16.0).epsilon(0.05));
}
