#include <doctest.h>

#include <cmath>
#include <random>

#include "nbl/convolution.hpp"

using namespace nbl;

namespace {

std::vector<double> random_field(const Grid2D& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> u(g.cells());
  for (double& v : u) v = 2.0 * (double(rng() >> 11) * 0x1p-53) - 1.0;
  return u;
}

}  // namespace

TEST_CASE("unit-mass kernel reproduces constants") {
  Grid2D g = make_grid(0.0, 4.0, 0.0, 4.0, 40, 40);
  KernelStencil k = discretize_kernel(BumpProfile{1.0, 0.8, 3}, g.dx, g.dy);
  std::vector<double> u(g.cells(), 3.25);
  Extension ext{boundary_mode::far_field, 3.25};

  auto direct = convolve_direct(u, k, g, ext);
  for (double v : direct) CHECK(v == doctest::Approx(3.25).epsilon(1e-12));

  FastConvolver fc(g, k, ext.mode, true, false);
  std::vector<double> fast(g.cells());
  fc.convolve(u, ext.far, fast);
  for (double v : fast) CHECK(v == doctest::Approx(3.25).epsilon(1e-12));
}

TEST_CASE("delta datum returns the weight array") {
  Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 21, 21);
  KernelStencil k = discretize_kernel(BumpProfile{1.0, 0.2, 3}, g.dx, g.dy);
  std::vector<double> u(g.cells(), 0.0);
  int ci = 10, cj = 10;
  u[g.index(ci, cj)] = 1.0 / g.cell_area();
  auto out = convolve_direct(u, k, g, {boundary_mode::far_field, 0.0});
  for (int dj = -k.ry; dj <= k.ry; ++dj)
    for (int di = -k.rx; di <= k.rx; ++di)
      CHECK(out[g.index(ci + di, cj + dj)] ==
            doctest::Approx(k.weights[k.idx(di, dj)]).epsilon(1e-12));
}

TEST_CASE("fast path agrees with the direct sum") {
  for (int n : {31, 64}) {
    Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, n, n);
    KernelStencil k = discretize_kernel(BumpProfile{1.0, 0.2, 3}, g.dx, g.dy);
    auto u = random_field(g, 1000 + n);

    for (auto mode : {boundary_mode::far_field, boundary_mode::periodic}) {
      Extension ext{mode, 0.17};
      auto want = convolve_direct(u, k, g, ext);
      FastConvolver fc(g, k, mode, true, true);
      std::vector<double> got(g.cells());
      fc.convolve(u, ext.far, got);
      double dev = 0.0;
      for (std::size_t p = 0; p < got.size(); ++p)
        dev = std::max(dev, std::abs(got[p] - want[p]));
      CHECK(dev < 1e-10);

      std::vector<double> ax(g.cells()), ay(g.cells()), wx(g.cells()), wy(g.cells());
      fc.gradient(u, ext.far, ax, ay);
      convolved_gradient_direct(u, k, g, ext, wx, wy);
      double devg = 0.0;
      for (std::size_t p = 0; p < ax.size(); ++p) {
        devg = std::max(devg, std::abs(ax[p] - wx[p]));
        devg = std::max(devg, std::abs(ay[p] - wy[p]));
      }
      CHECK(devg < 1e-10);
    }
  }
}

TEST_CASE("convolution is linear") {
  Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 32, 32);
  KernelStencil k = discretize_kernel(BumpProfile{1.0, 0.15, 3}, g.dx, g.dy);
  auto u = random_field(g, 5);
  auto w = random_field(g, 6);
  double a = 0.7, b = -1.3;
  std::vector<double> combo(g.cells());
  for (std::size_t p = 0; p < combo.size(); ++p) combo[p] = a * u[p] + b * w[p];
  Extension ext{boundary_mode::far_field, 0.0};
  auto cu = convolve_direct(u, k, g, ext);
  auto cw = convolve_direct(w, k, g, ext);
  auto cc = convolve_direct(combo, k, g, ext);
  for (std::size_t p = 0; p < cc.size(); ++p)
    CHECK(cc[p] == doctest::Approx(a * cu[p] + b * cw[p]).epsilon(1e-12));
}

TEST_CASE("gradient kernel: constants, ramps, radial symmetry") {
  // grid wide enough that the stencil at the center sees only the data
  Grid2D g = make_grid(-3.0, 3.0, -3.0, 3.0, 240, 240);
  KernelStencil k = discretize_kernel(BumpProfile{1.0, 2.4, 3}, g.dx, g.dy);
  Extension ext{boundary_mode::far_field, 0.0};
  int ci = g.nx / 2, cj = g.ny / 2;

  SUBCASE("constant maps to zero") {
    std::vector<double> u(g.cells(), 4.5);
    Vec2 a = convolved_gradient_direct_at(u, k, g, {boundary_mode::far_field, 4.5}, ci, cj);
    CHECK(std::abs(a.x) < 1e-12);
    CHECK(std::abs(a.y) < 1e-12);
  }

  SUBCASE("linear ramp recovers the slope") {
    double slope = 0.8;
    std::vector<double> u(g.cells());
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) u[g.index(i, j)] = slope * g.cell_center(i, j).x;
    Vec2 a = convolved_gradient_direct_at(u, k, g, ext, ci, cj);
    CHECK(a.x == doctest::Approx(slope).epsilon(1e-6));
    CHECK(std::abs(a.y) < 1e-9);
  }

  SUBCASE("radially symmetric data about a center cell") {
    std::vector<double> u(g.cells());
    Vec2 c = g.cell_center(ci, cj);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        u[g.index(i, j)] = std::exp(-0.5 * (g.cell_center(i, j) - c).norm2());
    Vec2 a = convolved_gradient_direct_at(u, k, g, ext, ci, cj);
    CHECK(std::abs(a.x) < 1e-12);
    CHECK(std::abs(a.y) < 1e-12);
  }
}

TEST_CASE("gradient kernel commutes with central differences, order 2") {
  // compare grad(eta)*v against central differences of eta*v at interior
  // cells; the gap should shrink by about 4x when the mesh is halved
  auto gap = [](int n) {
    Grid2D g = make_grid(-2.0, 2.0, -2.0, 2.0, n, n);
    KernelStencil k = discretize_kernel(BumpProfile{1.0, 0.8, 3}, g.dx, g.dy);
    Extension ext{boundary_mode::far_field, 0.0};
    std::vector<double> v(g.cells());
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        Vec2 p = g.cell_center(i, j);
        v[g.index(i, j)] = std::sin(2.0 * p.x) * std::cos(1.5 * p.y);
      }
    FastConvolver fc(g, k, ext.mode, true, true);
    std::vector<double> conv(g.cells()), ax(g.cells()), ay(g.cells());
    fc.convolve(v, 0.0, conv);
    fc.gradient(v, 0.0, ax, ay);
    int guard = k.rx + 1 + int(std::ceil(k.rx * 0.25));
    double worst = 0.0;
    for (int j = guard; j < g.ny - guard; ++j)
      for (int i = guard; i < g.nx - guard; ++i) {
        double cdx = (conv[g.index(i + 1, j)] - conv[g.index(i - 1, j)]) / (2 * g.dx);
        double cdy = (conv[g.index(i, j + 1)] - conv[g.index(i, j - 1)]) / (2 * g.dy);
        worst = std::max(worst, std::abs(cdx - ax[g.index(i, j)]));
        worst = std::max(worst, std::abs(cdy - ay[g.index(i, j)]));
      }
    return worst;
  };
  double coarse = gap(100), fine = gap(200);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.45));
}

TEST_CASE("periodic wrap matches direct modular reads") {
  Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 12, 12);
  // stencil wider than the window: aliasing must match on both paths
  KernelStencil k = discretize_kernel(BumpProfile{1.0, 0.7, 3}, g.dx, g.dy);
  auto u = random_field(g, 99);
  Extension ext{boundary_mode::periodic, 0.0};
  auto want = convolve_direct(u, k, g, ext);
  FastConvolver fc(g, k, ext.mode, true, false);
  std::vector<double> got(g.cells());
  fc.convolve(u, 0.0, got);
  for (std::size_t p = 0; p < got.size(); ++p)
    CHECK(got[p] == doctest::Approx(want[p]).epsilon(1e-10));
}
