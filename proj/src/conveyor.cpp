#include "nbl/models/conveyor.hpp"

#include <cmath>

namespace nbl {

void ConveyorParams::validate() const {
  kernel.validate("conveyor.kernel");
  if (!(eps > 0.0) || !(eps_hat > eps))
    throw config_error("conveyor: require eps_hat > eps > 0");
  if (!(half_width > 0.0) || !(length > 0.0))
    throw config_error("conveyor: belt dimensions must be positive");
  if (!(region_width > 0.0) || !(region_width < length / 2.0))
    throw config_error("conveyor.region_width: require 0 < a < length/2");
  if (!(mu > 0.0)) throw config_error("conveyor.mu: must be positive");
  if (!(delta > 0.0)) throw config_error("conveyor.delta: must be positive");
  if (!(rho_max > 0.0)) throw config_error("conveyor.rho_max: must be positive");
  if (!(kappa > 0.0)) throw config_error("conveyor.kappa: must be positive");
  if (belt_speed < 0.0) throw config_error("conveyor.belt_speed: must be nonnegative");
  if (q_in < 0.0 || q_out < 0.0)
    throw config_error("conveyor: inflow/outflow rates must be nonnegative");
}

double smooth_heaviside(double xi, double mu) {
  if (xi <= -mu) return 0.0;
  if (xi >= mu) return 1.0;
  return smoothstep01((xi + mu) / (2.0 * mu));
}

namespace {

// 1 at d = 0 decaying to 0 at d >= 1; C2 against |.| since the smoothstep has
// vanishing first and second derivatives at both ends.
inline double edge_profile(double d) { return 1.0 - smoothstep01(d); }

inline double cutoff_x1(double x1, const ConveyorParams& p) {
  if (x1 < 0.0) return edge_profile(-x1 / p.delta);
  if (x1 > p.length) return edge_profile((x1 - p.length) / p.delta);
  return 1.0;
}

// (1 - s^2)^3 on [-1, 1]; C2 at the edges.
inline double cube_bump(double s) {
  double t = 1.0 - s * s;
  if (t <= 0.0) return 0.0;
  return t * t * t;
}

// Outflow factor: zero for rho <= 0, identity beyond kappa, C2 in between.
inline double sigma_outflow(double rho, double kappa) {
  if (rho <= 0.0) return 0.0;
  if (rho >= kappa) return rho;
  return rho * smoothstep01(rho / kappa);
}

}  // namespace

Vec2 boundary_repulsion(Vec2 x, const ConveyorParams& p) {
  double lower = edge_profile(std::abs(x.y + p.half_width) / p.delta);
  double upper = edge_profile(std::abs(x.y - p.half_width) / p.delta);
  return {0.0, p.eps_hat * (lower - upper) * cutoff_x1(x.x, p)};
}

Vec2 belt_velocity(Vec2 x, const ConveyorParams& p) {
  double ramp = 1.0 - smoothstep01((x.x - (p.length - p.region_width)) / p.region_width);
  Vec2 b = boundary_repulsion(x, p);
  return {p.belt_speed * ramp + b.x, b.y};
}

Vec2 cargo_flux(double, Vec2 x, double rho, Vec2 a, const ConveyorParams& p) {
  Vec2 v = belt_velocity(x, p);
  double h = smooth_heaviside(rho - p.rho_max, p.mu);
  double s = p.eps * h / std::sqrt(1.0 + a.norm2());
  return {rho * (v.x - s * a.x), rho * (v.y - s * a.y)};
}

double cargo_source(double, Vec2 x, double rho, const ConveyorParams& p) {
  const double a = p.region_width, ell = p.half_width, L = p.length;
  double yin = cube_bump(x.y / ell);
  double in = p.q_in * cube_bump((x.x - a / 2.0) / (a / 2.0)) * yin;
  double out = p.q_out * cube_bump((x.x - (L - a / 2.0)) / (a / 2.0)) * yin *
               sigma_outflow(rho, p.kappa);
  return in - out;
}

ConveyorModel::ConveyorModel(ConveyorParams params) : params_(params) {
  params_.validate();
}

Vec2 ConveyorModel::flux(double t, Vec2 x, int, double u, Vec2 a) const {
  return cargo_flux(t, x, u, a, params_);
}

void ConveyorModel::source(double t, Vec2 x, std::span<const double> u, Vec2,
                           std::span<double> out) const {
  out[0] = cargo_source(t, x, u[0], params_);
}

double ConveyorModel::wave_speed_bound(const Field& f, const Grid2D&) const {
  // max |H^mu'| for the quintic smoothstep regularization is 15/16 / mu.
  double h_deriv_max = 0.9375 / params_.mu;
  double rho_max_now = linf_norm(f, 0);
  return params_.belt_speed + params_.eps_hat +
         params_.eps * (1.0 + rho_max_now * h_deriv_max);
}

}  // namespace nbl
