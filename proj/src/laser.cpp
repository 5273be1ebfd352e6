#include "nbl/models/laser.hpp"

#include <cmath>

namespace nbl {

void LaserParams::resolve_cutoff(const Grid2D& grid) {
  if (r_cut <= 0.0) r_cut = 2.0 * grid.diameter();
  if (R_cut <= 0.0) R_cut = 3.0 * grid.diameter();
}

void LaserParams::validate() const {
  wind.validate("laser.wind");
  intensity.validate("laser.intensity");
  kernel.validate("laser.kernel");
  if (tau_g < 0.0) throw config_error("laser.tau_g: must be nonnegative");
  if (wind.amplitude < 0.0) throw config_error("laser.wind_amplitude: must be nonnegative");
  if (intensity.amplitude < 0.0) throw config_error("laser.intensity_amplitude: must be nonnegative");
  if (hold_time < 0.0) throw config_error("laser.hold_time: must be nonnegative");
  if (cut_speed < 0.0) throw config_error("laser.cut_speed: must be nonnegative");
  if (!(R_cut > r_cut) || r_cut <= 0.0)
    throw config_error("laser cutoff: require 0 < r_cut < R_cut");
  if (exclude_radius < 0.0) throw config_error("laser.exclude_radius: must be nonnegative");
}

Vec2 laser_trajectory(double t, const LaserParams& p) {
  if (t <= p.hold_time) return p.hold_point;
  return {p.hold_point.x + p.cut_speed * (t - p.hold_time), p.hold_point.y};
}

WindIntensity wind_and_intensity(double t, Vec2 x, const LaserParams& p) {
  double d = (x - laser_trajectory(t, p)).norm();
  return {p.wind.value(d), p.intensity.value(d)};
}

double shear_cutoff(double t, Vec2 x, const LaserParams& p) {
  double d = (x - laser_trajectory(t, p)).norm();
  if (d <= p.r_cut) return p.tau_g;
  if (d >= p.R_cut) return 0.0;
  return p.tau_g * (1.0 - smoothstep01((d - p.r_cut) / (p.R_cut - p.r_cut)));
}

Vec2 laser_flux(double t, Vec2 x, double h_m, Vec2 a, const LaserParams& p) {
  double d = (x - laser_trajectory(t, p)).norm();
  double w = p.wind.value(d);
  double tg = (d <= p.r_cut) ? p.tau_g
              : (d >= p.R_cut) ? 0.0
              : p.tau_g * (1.0 - smoothstep01((d - p.r_cut) / (p.R_cut - p.r_cut)));
  double q = (w * h_m - tg * h_m * h_m) / std::sqrt(1.0 + a.norm2());
  return {-q * a.x, -q * a.y};
}

void laser_source(double t, Vec2 x, Vec2 a, const LaserParams& p, std::span<double> out) {
  double d = (x - laser_trajectory(t, p)).norm();
  double rate = p.intensity.value(d) * cos2_incidence(a);
  out[0] = rate;
  out[1] = -rate;
}

LaserModel::LaserModel(LaserParams params) : params_(params) {
  params_.validate();
  far_ = {0.0, params_.plate_thickness};
}

Vec2 LaserModel::flux(double t, Vec2 x, int c, double u, Vec2 a) const {
  if (c != 0) return {0.0, 0.0};
  return laser_flux(t, x, u, a, params_);
}

void LaserModel::source(double t, Vec2 x, std::span<const double>, Vec2 a,
                        std::span<double> out) const {
  laser_source(t, x, a, params_, out);
}

double LaserModel::wave_speed_bound(const Field& f, const Grid2D&) const {
  // |d flux / d h_m| <= (w + 2 T_g |h_m|) |A| / sqrt(1 + |A|^2) <= w + 2 tau_g |h_m|
  return params_.wind.amplitude + 2.0 * params_.tau_g * linf_norm(f, 0);
}

}  // namespace nbl
