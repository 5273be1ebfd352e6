#ifndef NBL_MODELS_BLOWUP_HPP
#define NBL_MODELS_BLOWUP_HPP

#include "nbl/model.hpp"

namespace nbl {

/// Spatial weight of the localized blow-up example: 1 on |x| <= 1, zero from
/// |x| = 2 on, (1 - (|x|-1)^3)^4 in between.
double blowup_psi(double r);

/// Pure-source models du/dt = (eta * u) u psi(x). The homogeneous variant has
/// psi == 1 and is run on a periodic grid with constant datum, recovering the
/// ODE u' = u^2 whose solution 1/(1-t) leaves every bounded set as t -> 1.
struct BlowupParams {
  bool use_psi = false;          ///< false: homogeneous variant
  double initial_value = 1.0;    ///< datum of the homogeneous variant
  BumpProfile kernel{1.0, 0.3, 3};

  void validate() const;
};

/// Source rate (eta*u)(x) * u * psi(x); conv_u is supplied by the solver.
double blowup_source(double t, Vec2 x, double u, double conv_u, bool use_psi);

class BlowupModel final : public Model {
 public:
  explicit BlowupModel(BlowupParams params);

  int n_components() const override { return 1; }
  std::string component_name(int) const override { return "u"; }
  const std::vector<double>& far_field() const override { return far_; }
  nonlocal_kind kind() const override { return nonlocal_kind::convolution; }
  const std::vector<double>& nonlocal_weights() const override { return weights_; }
  const BumpProfile& kernel_profile() const override { return params_.kernel; }
  bool flux_active(int) const override { return false; }
  Vec2 flux(double, Vec2, int, double, Vec2) const override { return {0.0, 0.0}; }
  void source(double t, Vec2 x, std::span<const double> u, Vec2 a,
              std::span<double> out) const override {
    out[0] = blowup_source(t, x, u[0], a.x, params_.use_psi);
  }
  double wave_speed_bound(const Field&, const Grid2D&) const override { return 0.0; }

  const BlowupParams& params() const { return params_; }

 private:
  BlowupParams params_;
  std::vector<double> far_;
  std::vector<double> weights_{1.0};
};

}  // namespace nbl

#endif
