#include <doctest.h>

#include <cmath>

#include "nbl/models/blowup.hpp"
#include "nbl/models/conveyor.hpp"
#include "nbl/models/laser.hpp"

using namespace nbl;

namespace {

LaserParams desk_laser() {
  LaserParams p;
  p.resolve_cutoff(make_grid(0.0, 20.0, -2.0, 2.0, 800, 160));
  return p;
}

}  // namespace

TEST_CASE("laser trajectory") {
  LaserParams p = desk_laser();
  CHECK(laser_trajectory(0.05, p).x == 3.0);
  CHECK(laser_trajectory(0.05, p).y == 0.0);
  CHECK(laser_trajectory(0.1, p).x == 3.0);
  CHECK(laser_trajectory(0.6, p).x == doctest::Approx(23.0).epsilon(1e-14));
  CHECK(laser_trajectory(0.6, p).y == 0.0);
}

TEST_CASE("wind and intensity profiles") {
  LaserParams p = desk_laser();
  auto at_center = wind_and_intensity(0.05, {3.0, 0.0}, p);
  CHECK(at_center.wind == 1.0);
  CHECK(at_center.intensity == 2.0);

  auto outside = wind_and_intensity(0.05, {3.0 + 3.6, 0.0}, p);
  CHECK(outside.wind == 0.0);
  CHECK(outside.intensity == 0.0);

  auto mid = wind_and_intensity(0.05, {3.6, 0.0}, p);
  CHECK(mid.intensity == doctest::Approx(0.35595703125).epsilon(1e-15));
}

TEST_CASE("shear cutoff is the full coefficient on the grid") {
  Grid2D g = make_grid(0.0, 20.0, -2.0, 2.0, 800, 160);
  LaserParams p = desk_laser();
  CHECK(shear_cutoff(0.0, {0.0, 0.0}, p) == 4.0);
  CHECK(shear_cutoff(0.0, {20.0, 2.0}, p) == 4.0);
  for (int i : {0, 400, 799})
    CHECK(shear_cutoff(0.5, g.cell_center(i, 80), p) == 4.0);
  // beyond R_cut the coefficient vanishes
  CHECK(shear_cutoff(0.0, {3.0 + p.R_cut + 1.0, 0.0}, p) == 0.0);
  // ramp between the two radii is monotone
  double a = shear_cutoff(0.0, {3.0 + p.r_cut + 0.25 * (p.R_cut - p.r_cut), 0.0}, p);
  double b = shear_cutoff(0.0, {3.0 + p.r_cut + 0.75 * (p.R_cut - p.r_cut), 0.0}, p);
  CHECK(a > b);
  CHECK(a < 4.0);
  CHECK(b > 0.0);
}

TEST_CASE("cos2 incidence") {
  CHECK(cos2_incidence({0.0, 0.0}) == 1.0);
  CHECK(cos2_incidence({1.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cos2_incidence({3.0, 0.0}) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(cos2_incidence({0.6, 0.8}) == doctest::Approx(0.5).epsilon(1e-15));
  for (double ax : {-2.0, 0.5, 7.0}) {
    double c = cos2_incidence({ax, 0.3});
    CHECK(c > 0.0);
    CHECK(c < 1.0);
  }
}

TEST_CASE("laser flux") {
  LaserParams p = desk_laser();
  Vec2 at_beam{3.0, 0.0};
  CHECK(laser_flux(0.0, at_beam, 0.0, {1.0, 2.0}, p).x == 0.0);
  CHECK(laser_flux(0.0, at_beam, 0.5, {0.0, 0.0}, p).x == 0.0);
  // w = 1, T_g = 4, h_m = 0.1, A = (1,0) -> (-0.06/sqrt(2), 0)
  Vec2 f = laser_flux(0.0, at_beam, 0.1, {1.0, 0.0}, p);
  CHECK(f.x == doctest::Approx(-0.06 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(f.y == 0.0);
}

TEST_CASE("laser source cancels pointwise") {
  LaserParams p = desk_laser();
  double out[2];
  laser_source(0.0, {3.0, 0.0}, {0.0, 0.0}, p, out);
  CHECK(out[0] == 2.0);
  CHECK(out[1] == -2.0);

  laser_source(0.0, {10.0, 0.0}, {0.0, 0.0}, p, out);  // outside the beam
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 0.0);

  laser_source(0.0, {3.0, 0.0}, {1.0, 0.0}, p, out);  // i = 2, |A| = 1
  CHECK(out[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(out[1] == -out[0]);

  for (double ax : {0.0, 0.3, 2.0}) {
    laser_source(0.0, {3.4, 0.2}, {ax, -ax}, p, out);
    CHECK(out[0] >= 0.0);
    CHECK(out[0] + out[1] == 0.0);
  }
}

TEST_CASE("laser wave speed bound") {
  Grid2D g = make_grid(0.0, 20.0, -2.0, 2.0, 100, 20);
  LaserModel model(desk_laser());
  Field f(2, g, model.far_field());
  CHECK(model.wave_speed_bound(f, g) == doctest::Approx(1.0));  // h_m == 0
  f.at(0, 3, 3) = -0.5;
  CHECK(model.wave_speed_bound(f, g) == doctest::Approx(1.0 + 2.0 * 4.0 * 0.5));
}

TEST_CASE("laser params validation") {
  LaserParams p = desk_laser();
  p.tau_g = -1.0;
  CHECK_THROWS_AS(LaserModel{p}, config_error);
  p = desk_laser();
  p.R_cut = p.r_cut;
  CHECK_THROWS_AS(LaserModel{p}, config_error);
}

TEST_CASE("smooth heaviside") {
  double mu = 0.25;
  CHECK(smooth_heaviside(-2.0 * mu, mu) == 0.0);
  CHECK(smooth_heaviside(2.0 * mu, mu) == 1.0);
  CHECK(smooth_heaviside(0.0, mu) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(smooth_heaviside(-1.0001 * mu, mu) == 0.0);
  CHECK(smooth_heaviside(1.0001 * mu, mu) == 1.0);
  double prev = -1.0;
  for (int k = 0; k <= 100; ++k) {
    double v = smooth_heaviside(-2.0 * mu + k * 0.04 * mu, mu);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("boundary repulsion") {
  ConveyorParams p;
  CHECK(boundary_repulsion({5.0, -p.half_width}, p).y == doctest::Approx(p.eps_hat));
  CHECK(boundary_repulsion({5.0, p.half_width}, p).y == doctest::Approx(-p.eps_hat));
  CHECK(boundary_repulsion({5.0, -p.half_width}, p).x == 0.0);
  CHECK(boundary_repulsion({0.0, p.half_width}, p).y == doctest::Approx(-p.eps_hat));
  CHECK(boundary_repulsion({p.length, p.half_width}, p).y == doctest::Approx(-p.eps_hat));
  // vanishes away from both bands
  CHECK(boundary_repulsion({5.0, 0.0}, p).y == 0.0);
  CHECK(boundary_repulsion({5.0, p.half_width + 1.01 * p.delta}, p).y == 0.0);
  CHECK(boundary_repulsion({5.0, -p.half_width - 1.01 * p.delta}, p).y == 0.0);
  // compact support in x1 as well
  CHECK(boundary_repulsion({-1.01 * p.delta, p.half_width}, p).y == 0.0);
  CHECK(boundary_repulsion({p.length + 1.01 * p.delta, p.half_width}, p).y == 0.0);
  // the hypothesis behind support invariance
  CHECK(p.eps_hat > p.eps);
}

TEST_CASE("belt velocity satisfies the edge sign conditions") {
  ConveyorParams p;
  for (double y : {-p.half_width, 0.0, p.half_width}) {
    CHECK(belt_velocity({0.0, y}, p).x >= 0.0);
    CHECK(std::abs(belt_velocity({p.length, y}, p).x) < 1e-14);
  }
  for (double x : {0.0, 3.0, p.length}) {
    CHECK(belt_velocity({x, -p.half_width}, p).y >= p.eps_hat - 1e-14);
    CHECK(belt_velocity({x, p.half_width}, p).y <= -p.eps_hat + 1e-14);
  }
}

TEST_CASE("cargo flux") {
  ConveyorParams p;
  Vec2 x{5.0, 0.0};
  CHECK(cargo_flux(0.0, x, 0.0, {1.0, 1.0}, p).x == 0.0);
  CHECK(cargo_flux(0.0, x, 0.0, {1.0, 1.0}, p).y == 0.0);

  // well below threshold: pure transport rho * v
  double rho = p.rho_max - 2.0 * p.mu;
  Vec2 v = belt_velocity(x, p);
  Vec2 f = cargo_flux(0.0, x, rho, {0.7, -0.4}, p);
  CHECK(f.x == rho * v.x);
  CHECK(f.y == rho * v.y);

  // above threshold with v = 0: pure nonlocal drift
  ConveyorParams q = p;
  q.belt_speed = 0.0;
  double rho2 = q.rho_max + 2.0 * q.mu;
  Vec2 f2 = cargo_flux(0.0, {5.0, 0.0}, rho2, {1.0, 0.0}, q);
  CHECK(f2.x == doctest::Approx(-rho2 * q.eps / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(f2.y == 0.0);
}

TEST_CASE("cargo source") {
  ConveyorParams p;
  CHECK(cargo_source(0.0, {p.length / 2.0, 0.0}, 1.0, p) == 0.0);
  CHECK(cargo_source(0.0, {p.length - p.region_width / 2.0, 0.0}, -0.3, p) == 0.0);
  CHECK(cargo_source(0.0, {p.length - p.region_width / 2.0, 0.0}, 0.0, p) == 0.0);
  CHECK(cargo_source(0.0, {p.region_width / 2.0, 0.0}, 0.0, p) == doctest::Approx(p.q_in));
  for (double rho : {-1.0, 0.0})
    for (double x1 : {0.2, 0.5, 9.8})
      CHECK(cargo_source(0.0, {x1, 0.1}, rho, p) >= 0.0);
}

TEST_CASE("conveyor wave speed bound") {
  ConveyorParams p;
  Grid2D g = make_grid(0.0, p.length, -p.half_width, p.half_width, 40, 8);
  ConveyorModel model(p);
  Field f(1, g, {0.0});
  CHECK(model.wave_speed_bound(f, g) ==
        doctest::Approx(p.belt_speed + p.eps_hat + p.eps));
}

TEST_CASE("conveyor requires eps_hat > eps") {
  ConveyorParams p;
  p.eps_hat = p.eps;
  CHECK_THROWS_AS(ConveyorModel{p}, config_error);
  p.eps_hat = 0.5 * p.eps;
  CHECK_THROWS_AS(ConveyorModel{p}, config_error);
}

TEST_CASE("blowup psi and source") {
  CHECK(blowup_psi(0.5) == 1.0);
  CHECK(blowup_psi(2.5) == 0.0);
  CHECK(blowup_psi(1.5) == doctest::Approx(0.586181640625).epsilon(1e-15));
  CHECK(blowup_psi(-1.5) == blowup_psi(1.5));

  CHECK(blowup_source(0.0, {5.0, 5.0}, 1.0, 1.0, false) == 1.0);
  CHECK(blowup_source(0.0, {1.5, 0.0}, 2.0, 3.0, true) ==
        doctest::Approx(6.0 * 0.586181640625).epsilon(1e-15));
  CHECK(blowup_source(0.0, {2.5, 0.0}, 2.0, 3.0, true) == 0.0);

  BlowupParams bp;
  BlowupModel model(bp);
  Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 4, 4);
  Field f(1, g, model.far_field());
  CHECK(model.wave_speed_bound(f, g) == 0.0);
  CHECK_FALSE(model.flux_active(0));
}
