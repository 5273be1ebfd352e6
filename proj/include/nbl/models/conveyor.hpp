#ifndef NBL_MODELS_CONVEYOR_HPP
#define NBL_MODELS_CONVEYOR_HPP

#include "nbl/model.hpp"

namespace nbl {

/// Conveyor-belt cargo equation. The belt is [0, length] x [-half_width,
/// half_width]; density in cargo units, speeds in mm/s.
struct ConveyorParams {
  double half_width = 1.0;     ///< ell
  double length = 10.0;        ///< L
  double delta = 0.25;         ///< boundary-layer width of the repulsion bands
  double eps = 0.2;            ///< nonlocal drift magnitude
  double eps_hat = 0.4;        ///< boundary repulsion magnitude (> eps)
  double mu = 0.05;            ///< Heaviside regularization half-width
  double rho_max = 0.2;        ///< density threshold activating the drift
  double belt_speed = 2.0;     ///< v_stat magnitude along +x1
  double region_width = 1.0;   ///< a: width of the inflow/outflow regions
  double q_in = 1.0;           ///< inflow rate amplitude
  double q_out = 4.0;          ///< outflow rate amplitude
  double kappa = 0.1;          ///< smoothing scale of the outflow factor sigma
  BumpProfile kernel{1.0, 0.4, 3};

  void validate() const;
};

/// C2 regularization of the Heaviside function: exact outside [-mu, mu],
/// quintic smoothstep inside.
double smooth_heaviside(double xi, double mu);

/// Inward-pointing boundary field b: zero first component; second component
/// +eps_hat at x2 = -ell and -eps_hat at x2 = +ell, supported on bands of
/// width delta around both lines and cut off smoothly in x1 beyond
/// [-delta, length + delta].
Vec2 boundary_repulsion(Vec2 x, const ConveyorParams& p);

/// Full velocity v = v_stat + b; v_stat rides the belt along +x1 and ramps
/// to zero across the outflow region so nothing is carried past x1 = length.
Vec2 belt_velocity(Vec2 x, const ConveyorParams& p);

/// rho * (v(x) + H^mu(rho - rho_max) * eps * (-A)/sqrt(1+|A|^2)).
Vec2 cargo_flux(double t, Vec2 x, double rho, Vec2 a, const ConveyorParams& p);

/// Psi_in - Psi_out: tensor-product bumps supported exactly on the inflow and
/// outflow regions; the outflow factor sigma(rho) vanishes for rho <= 0 and
/// equals rho beyond kappa.
double cargo_source(double t, Vec2 x, double rho, const ConveyorParams& p);

class ConveyorModel final : public Model {
 public:
  explicit ConveyorModel(ConveyorParams params);

  int n_components() const override { return 1; }
  std::string component_name(int) const override { return "rho"; }
  const std::vector<double>& far_field() const override { return far_; }
  nonlocal_kind kind() const override { return nonlocal_kind::gradient_of_sum; }
  const std::vector<double>& nonlocal_weights() const override { return weights_; }
  const BumpProfile& kernel_profile() const override { return params_.kernel; }
  bool flux_active(int) const override { return true; }
  Vec2 flux(double t, Vec2 x, int c, double u, Vec2 a) const override;
  void source(double t, Vec2 x, std::span<const double> u, Vec2 a,
              std::span<double> out) const override;
  double wave_speed_bound(const Field& f, const Grid2D& grid) const override;

  const ConveyorParams& params() const { return params_; }

 private:
  ConveyorParams params_;
  std::vector<double> far_{0.0};
  std::vector<double> weights_{1.0};
};

}  // namespace nbl

#endif
