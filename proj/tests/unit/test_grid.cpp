#include <doctest.h>

#include <cmath>
#include <random>

#include "nbl/grid.hpp"

using namespace nbl;

namespace {

Field constant_field(const Grid2D& g, double value, double far) {
  Field f(1, g, {far});
  auto u = f.component(0);
  std::fill(u.begin(), u.end(), value);
  return f;
}

// Independent quadrature oracle for the psi datum: adaptive Simpson.
double simpson(double (*fn)(double), double a, double b, double fa, double fm,
               double fb, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = fn(lm), frm = fn(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(fn, a, m, fa, flm, fm, tol / 2, depth - 1) +
         simpson(fn, m, b, fm, frm, fb, tol / 2, depth - 1);
}

double quad(double (*fn)(double), double a, double b, double tol = 1e-12) {
  double m = 0.5 * (a + b);
  return simpson(fn, a, b, fn(a), fn(m), fn(b), tol, 40);
}

double psi_ramp(double x) {
  double r = std::abs(x);
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  double t = 1.0 - (r - 1.0) * (r - 1.0) * (r - 1.0);
  return t * t * t * t;
}

}  // namespace

TEST_CASE("make_grid spacing and centers") {
  Grid2D g = make_grid(0.0, 40.0, -2.0, 2.0, 8000, 800);
  CHECK(g.dx == doctest::Approx(5e-3).epsilon(1e-14));
  CHECK(g.dy == doctest::Approx(5e-3).epsilon(1e-14));

  Grid2D one = make_grid(0.0, 1.0, 0.0, 1.0, 1, 1);
  CHECK(one.dx == 1.0);
  CHECK(one.dy == 1.0);

  Grid2D g2 = make_grid(0.0, 2.0, 0.0, 1.0, 4, 2);
  CHECK(g2.dx == 0.5);
  CHECK(g2.dy == 0.5);
  CHECK(g2.cell_center(0, 0).x == doctest::Approx(0.25));
  CHECK(g2.cell_center(0, 0).y == doctest::Approx(0.25));
}

TEST_CASE("make_grid rejects degenerate input") {
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 0.0, 1.0, 4, 4), config_error);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 2.0, 1.0, 4, 4), config_error);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0, 1.0, 0, 4), config_error);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0, 1.0, 4, -1), config_error);
}

TEST_CASE("integrate on simple data") {
  Grid2D g = make_grid(0.0, 2.0, 0.0, 2.0, 10, 10);
  CHECK(integrate(constant_field(g, 1.0, 1.0), 0, g) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(integrate(constant_field(g, 0.0, 0.0), 0, g) == 0.0);

  Field cb(1, g, {0.0});
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) cb.at(0, i, j) = ((i + j) % 2 == 0) ? 1.0 : -1.0;
  CHECK(integrate(cb, 0, g) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("l1 and linf norms") {
  Grid2D g = make_grid(0.0, 2.0, 0.0, 2.0, 8, 8);
  Field f = constant_field(g, 1.0, 1.0);
  CHECK(l1_norm(f, 0, g) == doctest::Approx(4.0));
  CHECK(linf_norm(f, 0) == 1.0);

  Grid2D g1 = make_grid(0.0, 1.0, 0.0, 1.0, 8, 8);
  Field fm = constant_field(g1, -3.0, -3.0);
  CHECK(l1_norm(fm, 0, g1) == doctest::Approx(3.0));
  CHECK(linf_norm(fm, 0) == 3.0);
}

TEST_CASE("l1 of the psi ramp datum matches quadrature") {
  // 1D-as-2D layout: a single row of unit depth.
  Grid2D g = make_grid(-3.0, 3.0, -0.5, 0.5, 6000, 1);
  Field f(1, g, {0.0});
  for (int i = 0; i < g.nx; ++i) f.at(0, i, 0) = psi_ramp(g.cell_center(i, 0).x);
  double expected = quad(&psi_ramp, -3.0, 3.0);
  CHECK(expected == doctest::Approx(3.0681318681).epsilon(1e-6));  // sanity on the oracle
  CHECK(l1_norm(f, 0, g) == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("total variation of simple shapes") {
  Grid2D g = make_grid(0.0, 2.0, 0.0, 2.0, 10, 10);
  CHECK(total_variation(constant_field(g, 7.0, 7.0), 0, g) == 0.0);

  // 1D step across the full y-extent: the interior jump line contributes
  // exactly h * L_y; boundary cells add their jumps to the far value.
  Grid2D gs = make_grid(0.0, 2.0, 0.0, 3.0, 10, 6);
  SUBCASE("step") {
    double h = 2.0, ly = 3.0, lx = 2.0;
    Field f(1, gs, {0.0});
    for (int j = 0; j < gs.ny; ++j)
      for (int i = gs.nx / 2; i < gs.nx; ++i) f.at(0, i, j) = h;
    double interior_line = h * ly;
    double right_boundary = h * ly;
    double top_bottom = 2.0 * h * (lx / 2.0);
    CHECK(total_variation(f, 0, gs) ==
          doctest::Approx(interior_line + right_boundary + top_bottom).epsilon(1e-13));
  }

  SUBCASE("block indicator") {
    // k x k block of ones, far field 0: brute-force interface sum oracle.
    Grid2D gb = make_grid(0.0, 1.0, 0.0, 1.0, 16, 16);
    int k = 5, i0 = 4, j0 = 6;
    Field f(1, gb, {0.0});
    for (int j = j0; j < j0 + k; ++j)
      for (int i = i0; i < i0 + k; ++i) f.at(0, i, j) = 1.0;
    // oracle: sum over all cell interfaces (including window boundary)
    auto val = [&](int i, int j) {
      if (i < 0 || i >= gb.nx || j < 0 || j >= gb.ny) return 0.0;
      return f.at(0, i, j);
    };
    double oracle = 0.0;
    for (int j = 0; j < gb.ny; ++j)
      for (int i = -1; i < gb.nx; ++i)
        oracle += std::abs(val(i + 1, j) - val(i, j)) * gb.dy;
    for (int i = 0; i < gb.nx; ++i)
      for (int j = -1; j < gb.ny; ++j)
        oracle += std::abs(val(i, j + 1) - val(i, j)) * gb.dx;
    CHECK(oracle == doctest::Approx(4.0 * k * gb.dx).epsilon(1e-13));
    CHECK(total_variation(f, 0, gb) == doctest::Approx(oracle).epsilon(1e-13));
  }
}

TEST_CASE("integrate is linear") {
  Grid2D g = make_grid(-1.0, 3.0, 0.0, 1.0, 23, 17);
  std::mt19937_64 rng(7);
  auto rnd = [&] { return 2.0 * (double(rng() >> 11) * 0x1p-53) - 1.0; };
  Field f(1, g, {0.0}), h(1, g, {0.0}), combo(1, g, {0.0});
  double a = 1.7, b = -0.4;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      f.at(0, i, j) = rnd();
      h.at(0, i, j) = rnd();
      combo.at(0, i, j) = a * f.at(0, i, j) + b * h.at(0, i, j);
    }
  double lhs = integrate(combo, 0, g);
  double rhs = a * integrate(f, 0, g) + b * integrate(h, 0, g);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("norms are invariant under grid translation") {
  Grid2D g1 = make_grid(0.0, 1.0, 0.0, 1.0, 12, 9);
  Grid2D g2 = make_grid(5.0, 6.0, -2.0, -1.0, 12, 9);
  std::mt19937_64 rng(11);
  auto rnd = [&] { return 2.0 * (double(rng() >> 11) * 0x1p-53) - 1.0; };
  Field f1(1, g1, {0.25}), f2(1, g2, {0.25});
  for (int j = 0; j < g1.ny; ++j)
    for (int i = 0; i < g1.nx; ++i) {
      double v = rnd();
      f1.at(0, i, j) = v;
      f2.at(0, i, j) = v;
    }
  CHECK(l1_norm(f1, 0, g1) == l1_norm(f2, 0, g2));
  CHECK(linf_norm(f1, 0) == linf_norm(f2, 0));
  CHECK(total_variation(f1, 0, g1) == total_variation(f2, 0, g2));
}

TEST_CASE("total variation vanishes only for the far-field constant") {
  Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 6, 6);
  Field f = constant_field(g, 2.0, 2.0);
  CHECK(total_variation(f, 0, g) == 0.0);
  Field off = constant_field(g, 2.0, 1.0);  // constant but not the far value
  CHECK(total_variation(off, 0, g) > 0.0);
  Field bump = constant_field(g, 2.0, 2.0);
  bump.at(0, 3, 3) = 2.5;
  CHECK(total_variation(bump, 0, g) > 0.0);
}
