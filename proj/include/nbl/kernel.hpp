#ifndef NBL_KERNEL_HPP
#define NBL_KERNEL_HPP

#include <vector>

#include "nbl/common.hpp"

namespace nbl {

/// Compactly supported radial bump a * (1 - (s/r)^2)^p for |s| <= r.
/// With integer p >= 2 the profile has p-1 continuous derivatives at the
/// support boundary.
struct BumpProfile {
  double amplitude = 1.0;
  double radius = 1.0;
  int exponent = 3;

  double value(double s) const {
    double u = s / radius;
    double t = 1.0 - u * u;
    if (t <= 0.0) return 0.0;
    return amplitude * ipow(t, exponent);
  }

  /// d/ds of the profile (zero outside the support).
  double derivative(double s) const {
    double u = s / radius;
    double t = 1.0 - u * u;
    if (t <= 0.0) return 0.0;
    return amplitude * exponent * ipow(t, exponent - 1) * (-2.0 * s / (radius * radius));
  }

  void validate(const char* name) const;
};

/// A radial profile discretized on grid offsets, rescaled to unit discrete
/// mass, together with samples of the analytic kernel gradient (both share
/// the one normalization factor).
///
/// Layout: (2ry+1) x (2rx+1) row-major, entry (di,dj) at
/// (dj+ry)*(2rx+1) + (di+rx).
struct KernelStencil {
  int rx = 0, ry = 0;
  double dx = 0.0, dy = 0.0;
  std::vector<double> weights;
  std::vector<double> grad_x;
  std::vector<double> grad_y;

  std::size_t idx(int di, int dj) const {
    return std::size_t(dj + ry) * (2 * rx + 1) + (di + rx);
  }
  double weight(int di, int dj) const { return weights[idx(di, dj)]; }

  /// Discrete mass sum w * dx * dy (1 after normalization, up to round-off).
  double discrete_mass() const;
};

/// Samples eta(|x|) and grad eta at offsets (di*dx, dj*dy) with
/// rx = ceil(radius/dx), ry = ceil(radius/dy), then rescales so the discrete
/// mass is exactly one. A radius smaller than one cell would collapse to a
/// delta and is rejected.
KernelStencil discretize_kernel(const BumpProfile& eta, double dx, double dy);

}  // namespace nbl

#endif
