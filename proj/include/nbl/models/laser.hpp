#ifndef NBL_MODELS_LASER_HPP
#define NBL_MODELS_LASER_HPP

#include "nbl/model.hpp"

namespace nbl {

/// Parameters of the laser-cutting system. Component 0 is the melt height
/// h_m, component 1 the solid height h_s; both in mm, time in seconds.
struct LaserParams {
  double tau_g = 4.0;                      ///< shear coefficient
  BumpProfile wind{1.0, 3.6, 4};           ///< wind speed profile W
  BumpProfile intensity{2.0, 1.2, 6};      ///< beam intensity profile I
  BumpProfile kernel{1.0, 2.4, 3};         ///< averaging kernel eta (normalized on discretization)
  double plate_thickness = 4.5;            ///< initial and far-field h_s
  Vec2 hold_point{3.0, 0.0};               ///< drill position
  double hold_time = 0.1;                  ///< drill duration, s
  double cut_speed = 40.0;                 ///< beam speed along +x1 after the hold, mm/s
  double r_cut = 0.0;                      ///< shear cutoff: full strength within this distance
  double R_cut = 0.0;                      ///< shear cutoff: zero beyond this distance
  double exclude_radius = 3.6;             ///< hole footprint excluded from ripple statistics

  /// Fills r_cut/R_cut (when unset) with 2x/3x the domain diameter, which
  /// keeps the cutoff at full strength everywhere on the grid.
  void resolve_cutoff(const Grid2D& grid);
  void validate() const;
};

/// Beam position: parked at the hold point, then moving along +x1.
Vec2 laser_trajectory(double t, const LaserParams& p);

/// (w, i) at a point: both bumps evaluated at the distance from the beam.
struct WindIntensity {
  double wind;
  double intensity;
};
WindIntensity wind_and_intensity(double t, Vec2 x, const LaserParams& p);

/// tau_g * S(|x - x_L(t)|) with S == 1 within r_cut, == 0 beyond R_cut and a
/// quintic-smoothstep ramp in between.
double shear_cutoff(double t, Vec2 x, const LaserParams& p);

/// Squared cosine of the averaged incidence angle: 1 / (1 + |A|^2).
inline double cos2_incidence(Vec2 a) { return 1.0 / (1.0 + a.norm2()); }

/// Melt flux (w h_m - T_g h_m^2) * (-A) / sqrt(1 + |A|^2).
Vec2 laser_flux(double t, Vec2 x, double h_m, Vec2 a, const LaserParams& p);

/// Melting rate pair (+L, -L) with L = i(t,x) * cos2_incidence(A).
void laser_source(double t, Vec2 x, Vec2 a, const LaserParams& p, std::span<double> out);

class LaserModel final : public Model {
 public:
  explicit LaserModel(LaserParams params);

  int n_components() const override { return 2; }
  std::string component_name(int c) const override { return c == 0 ? "h_m" : "h_s"; }
  const std::vector<double>& far_field() const override { return far_; }
  nonlocal_kind kind() const override { return nonlocal_kind::gradient_of_sum; }
  const std::vector<double>& nonlocal_weights() const override { return weights_; }
  const BumpProfile& kernel_profile() const override { return params_.kernel; }
  bool flux_active(int c) const override { return c == 0; }
  Vec2 flux(double t, Vec2 x, int c, double u, Vec2 a) const override;
  void source(double t, Vec2 x, std::span<const double> u, Vec2 a,
              std::span<double> out) const override;
  double wave_speed_bound(const Field& f, const Grid2D& grid) const override;

  const LaserParams& params() const { return params_; }

 private:
  LaserParams params_;
  std::vector<double> far_;
  std::vector<double> weights_{1.0, 1.0};  // grad(eta * (h_m + h_s))
};

}  // namespace nbl

#endif
