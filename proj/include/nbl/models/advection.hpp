#ifndef NBL_MODELS_ADVECTION_HPP
#define NBL_MODELS_ADVECTION_HPP

#include "nbl/model.hpp"

namespace nbl {

/// Constant-coefficient linear advection of a single component, used for
/// scheme verification (exact transport solutions, L1 isometry of
/// perturbations). This is the model behind the "custom" scenario kind.
class AdvectionModel final : public Model {
 public:
  AdvectionModel(double vx, double vy) : v_{vx, vy} {}

  int n_components() const override { return 1; }
  std::string component_name(int) const override { return "u"; }
  const std::vector<double>& far_field() const override { return far_; }
  nonlocal_kind kind() const override { return nonlocal_kind::none; }
  const std::vector<double>& nonlocal_weights() const override { return weights_; }
  const BumpProfile& kernel_profile() const override { return kernel_; }
  bool flux_active(int) const override { return true; }
  Vec2 flux(double, Vec2, int, double u, Vec2) const override {
    return {v_.x * u, v_.y * u};
  }
  void source(double, Vec2, std::span<const double>, Vec2,
              std::span<double> out) const override {
    out[0] = 0.0;
  }
  double wave_speed_bound(const Field&, const Grid2D&) const override {
    return std::max(std::abs(v_.x), std::abs(v_.y));
  }

 private:
  Vec2 v_;
  std::vector<double> far_{0.0};
  std::vector<double> weights_{1.0};
  BumpProfile kernel_{};
};

}  // namespace nbl

#endif
