#ifndef NBL_MODEL_HPP
#define NBL_MODEL_HPP

#include <span>
#include <string>
#include <vector>

#include "nbl/grid.hpp"
#include "nbl/kernel.hpp"

namespace nbl {

/// How the kernel feeds the flux/source argument A.
enum class nonlocal_kind {
  none,             ///< decoupled model, A = 0
  convolution,      ///< A.x = (eta * sum c_k u_k), A.y unused
  gradient_of_sum,  ///< A = grad(eta * sum c_k u_k)
};

/// A concrete system of balance laws: component count, fluxes, sources,
/// nonlocal wiring and a wave-speed bound for the CFL condition. The
/// equations couple only through the nonlocal argument A, so flux takes a
/// single component value while source sees the whole state at a cell.
class Model {
 public:
  virtual ~Model() = default;

  virtual int n_components() const = 0;
  virtual std::string component_name(int c) const = 0;
  virtual const std::vector<double>& far_field() const = 0;

  virtual nonlocal_kind kind() const = 0;
  /// Coefficients of the combination fed to the kernel (size n_components).
  virtual const std::vector<double>& nonlocal_weights() const = 0;
  /// Convolution kernel profile (ignored when kind() == none).
  virtual const BumpProfile& kernel_profile() const = 0;

  /// Components with identically zero flux skip the convective sweeps.
  virtual bool flux_active(int c) const = 0;
  virtual Vec2 flux(double t, Vec2 x, int c, double u, Vec2 a) const = 0;
  virtual void source(double t, Vec2 x, std::span<const double> u, Vec2 a,
                      std::span<double> out) const = 0;

  /// Upper bound on |d flux / du| over the current state, any direction.
  virtual double wave_speed_bound(const Field& f, const Grid2D& grid) const = 0;
};

}  // namespace nbl

#endif
