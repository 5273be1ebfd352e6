#include "nbl/kernel.hpp"

#include <cmath>
#include <string>

namespace nbl {

void BumpProfile::validate(const char* name) const {
  if (!(radius > 0.0))
    throw config_error(std::string(name) + ": radius must be positive");
  if (exponent < 2)
    throw config_error(std::string(name) + ": exponent must be at least 2");
}

double KernelStencil::discrete_mass() const {
  kahan_sum s;
  for (double w : weights) s.add(w);
  return s.value() * dx * dy;
}

KernelStencil discretize_kernel(const BumpProfile& eta, double dx, double dy) {
  eta.validate("kernel");
  if (eta.radius < std::max(dx, dy))
    throw config_error("discretize_kernel: kernel radius " + std::to_string(eta.radius) +
                       " is smaller than one cell; the stencil would be a delta");
  KernelStencil k;
  k.rx = int(std::ceil(eta.radius / dx));
  k.ry = int(std::ceil(eta.radius / dy));
  k.dx = dx;
  k.dy = dy;
  std::size_t n = std::size_t(2 * k.rx + 1) * (2 * k.ry + 1);
  k.weights.resize(n);
  k.grad_x.resize(n);
  k.grad_y.resize(n);
  for (int dj = -k.ry; dj <= k.ry; ++dj) {
    for (int di = -k.rx; di <= k.rx; ++di) {
      double x = di * dx, y = dj * dy;
      double r = std::hypot(x, y);
      std::size_t p = k.idx(di, dj);
      k.weights[p] = eta.value(r);
      if (r > 0.0) {
        double d = eta.derivative(r);
        k.grad_x[p] = d * x / r;
        k.grad_y[p] = d * y / r;
      } else {
        k.grad_x[p] = 0.0;
        k.grad_y[p] = 0.0;
      }
    }
  }
  double mass = k.discrete_mass();
  if (!(mass > 0.0))
    throw config_error("discretize_kernel: sampled kernel has nonpositive mass");
  for (std::size_t p = 0; p < n; ++p) {
    k.weights[p] /= mass;
    k.grad_x[p] /= mass;
    k.grad_y[p] /= mass;
  }
  return k;
}

}  // namespace nbl
