#ifndef NBL_CONVOLUTION_HPP
#define NBL_CONVOLUTION_HPP

#include <memory>
#include <span>
#include <vector>

#include "nbl/grid.hpp"
#include "nbl/kernel.hpp"

namespace nbl {

/// Exterior extension used by convolution reads.
struct Extension {
  boundary_mode mode = boundary_mode::far_field;
  double far = 0.0;
};

/// Reference convolution by literal double sum:
///   out(i,j) = sum_d w(d) * u((i,j) - d) * dx * dy
/// with exterior reads resolved per the extension. Used as the oracle for the
/// fast path and for single-cell probes in tests.
std::vector<double> convolve_direct(std::span<const double> u,
                                    const KernelStencil& k, const Grid2D& grid,
                                    Extension ext);

double convolve_direct_at(std::span<const double> u, const KernelStencil& k,
                          const Grid2D& grid, Extension ext, int i, int j);

/// Direct-sum evaluation of ((d1 eta)*v, (d2 eta)*v) at one cell.
Vec2 convolved_gradient_direct_at(std::span<const double> v,
                                  const KernelStencil& k, const Grid2D& grid,
                                  Extension ext, int i, int j);

void convolved_gradient_direct(std::span<const double> v, const KernelStencil& k,
                               const Grid2D& grid, Extension ext,
                               std::span<double> ax, std::span<double> ay);

/// Spectral convolution path. Plans and kernel spectra are built once per
/// (grid, stencil, boundary mode) and reused across steps. The far-field
/// value is subtracted before the transform, which makes constants reproduce
/// exactly and keeps the padded exterior at zero.
class FastConvolver {
 public:
  FastConvolver(const Grid2D& grid, const KernelStencil& k, boundary_mode mode,
                bool need_weights, bool need_gradient);
  ~FastConvolver();

  FastConvolver(const FastConvolver&) = delete;
  FastConvolver& operator=(const FastConvolver&) = delete;

  /// out = far + (eta * (u - far)); unit-mass kernels reproduce constants.
  void convolve(std::span<const double> u, double far, std::span<double> out);

  /// (ax, ay) = grad(eta) * (v - far_v); the gradient of a constant vanishes.
  void gradient(std::span<const double> v, double far_v, std::span<double> ax,
                std::span<double> ay);

 private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

/// Combines the weighted sum v = sum_k c_k u_k (and its far-field value) and
/// evaluates grad(eta * v) through the given convolver.
void convolved_gradient(const Field& f, std::span<const double> coeffs,
                        FastConvolver& conv, std::span<double> ax,
                        std::span<double> ay, std::span<double> scratch);

}  // namespace nbl

#endif
