#include "nbl/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <mutex>

namespace nbl {

namespace {

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

int next_smooth(int n) {
  for (int m = n;; ++m) {
    int r = m;
    for (int f : {2, 3, 5})
      while (r % f == 0) r /= f;
    if (r == 1) return m;
  }
}

inline double read_ext(std::span<const double> u, const Grid2D& g, Extension ext,
                       int i, int j) {
  if (ext.mode == boundary_mode::periodic) {
    i %= g.nx;
    if (i < 0) i += g.nx;
    j %= g.ny;
    if (j < 0) j += g.ny;
    return u[std::size_t(j) * g.nx + i];
  }
  if (i < 0 || i >= g.nx || j < 0 || j >= g.ny) return ext.far;
  return u[std::size_t(j) * g.nx + i];
}

}  // namespace

double convolve_direct_at(std::span<const double> u, const KernelStencil& k,
                          const Grid2D& grid, Extension ext, int i, int j) {
  double acc = 0.0;
  for (int dj = -k.ry; dj <= k.ry; ++dj)
    for (int di = -k.rx; di <= k.rx; ++di)
      acc += k.weights[k.idx(di, dj)] * read_ext(u, grid, ext, i - di, j - dj);
  return acc * grid.dx * grid.dy;
}

Vec2 convolved_gradient_direct_at(std::span<const double> v, const KernelStencil& k,
                                  const Grid2D& grid, Extension ext, int i, int j) {
  double ax = 0.0, ay = 0.0;
  for (int dj = -k.ry; dj <= k.ry; ++dj)
    for (int di = -k.rx; di <= k.rx; ++di) {
      double val = read_ext(v, grid, ext, i - di, j - dj);
      std::size_t p = k.idx(di, dj);
      ax += k.grad_x[p] * val;
      ay += k.grad_y[p] * val;
    }
  return {ax * grid.dx * grid.dy, ay * grid.dx * grid.dy};
}

std::vector<double> convolve_direct(std::span<const double> u, const KernelStencil& k,
                                    const Grid2D& grid, Extension ext) {
  std::vector<double> out(grid.cells());
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i)
      out[grid.index(i, j)] = convolve_direct_at(u, k, grid, ext, i, j);
  return out;
}

void convolved_gradient_direct(std::span<const double> v, const KernelStencil& k,
                               const Grid2D& grid, Extension ext,
                               std::span<double> ax, std::span<double> ay) {
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      Vec2 a = convolved_gradient_direct_at(v, k, grid, ext, i, j);
      ax[grid.index(i, j)] = a.x;
      ay[grid.index(i, j)] = a.y;
    }
}

struct FastConvolver::impl {
  Grid2D grid;
  boundary_mode mode;
  int rx, ry;        // stencil radius
  int px, py;        // padded transform size
  int cw;            // complex row width px/2+1
  int off_x, off_y;  // placement of cell (0,0) in the padded array

  double* rbuf = nullptr;
  fftw_complex* cbuf = nullptr;
  fftw_complex* ctmp = nullptr;
  fftw_complex* spec_w = nullptr;
  fftw_complex* spec_gx = nullptr;
  fftw_complex* spec_gy = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  impl(const Grid2D& g, const KernelStencil& k, boundary_mode m, bool need_w,
       bool need_g)
      : grid(g), mode(m), rx(k.rx), ry(k.ry) {
    if (mode == boundary_mode::periodic) {
      px = g.nx;
      py = g.ny;
      off_x = 0;
      off_y = 0;
    } else {
      px = next_smooth(g.nx + 2 * rx);
      py = next_smooth(g.ny + 2 * ry);
      off_x = rx;
      off_y = ry;
    }
    cw = px / 2 + 1;
    std::size_t rn = std::size_t(py) * px;
    std::size_t cn = std::size_t(py) * cw;
    rbuf = fftw_alloc_real(rn);
    cbuf = fftw_alloc_complex(cn);
    ctmp = fftw_alloc_complex(cn);
    {
      std::lock_guard<std::mutex> lock(fftw_plan_mutex());
      fwd = fftw_plan_dft_r2c_2d(py, px, rbuf, cbuf, FFTW_ESTIMATE);
      inv = fftw_plan_dft_c2r_2d(py, px, ctmp, rbuf, FFTW_ESTIMATE);
    }
    if (need_w) spec_w = kernel_spectrum(k.weights, k);
    if (need_g) {
      spec_gx = kernel_spectrum(k.grad_x, k);
      spec_gy = kernel_spectrum(k.grad_y, k);
    }
  }

  ~impl() {
    {
      std::lock_guard<std::mutex> lock(fftw_plan_mutex());
      if (fwd) fftw_destroy_plan(fwd);
      if (inv) fftw_destroy_plan(inv);
    }
    fftw_free(rbuf);
    fftw_free(cbuf);
    fftw_free(ctmp);
    fftw_free(spec_w);
    fftw_free(spec_gx);
    fftw_free(spec_gy);
  }

  // Transform of the stencil wrapped onto the padded torus. The cell area and
  // the inverse-transform normalization are folded in here.
  fftw_complex* kernel_spectrum(const std::vector<double>& vals, const KernelStencil& k) {
    std::size_t rn = std::size_t(py) * px;
    std::fill(rbuf, rbuf + rn, 0.0);
    const double scale = grid.dx * grid.dy / (double(px) * double(py));
    for (int dj = -ry; dj <= ry; ++dj)
      for (int di = -rx; di <= rx; ++di) {
        int wi = ((di % px) + px) % px;
        int wj = ((dj % py) + py) % py;
        rbuf[std::size_t(wj) * px + wi] += vals[k.idx(di, dj)] * scale;
      }
    fftw_complex* spec = fftw_alloc_complex(std::size_t(py) * cw);
    fftw_execute_dft_r2c(fwd, rbuf, spec);
    return spec;
  }

  void load(std::span<const double> u, double far) {
    std::size_t rn = std::size_t(py) * px;
    std::fill(rbuf, rbuf + rn, 0.0);
    for (int j = 0; j < grid.ny; ++j) {
      double* dst = rbuf + std::size_t(j + off_y) * px + off_x;
      const double* src = u.data() + std::size_t(j) * grid.nx;
      for (int i = 0; i < grid.nx; ++i) dst[i] = src[i] - far;
    }
    fftw_execute_dft_r2c(fwd, rbuf, cbuf);
  }

  void apply(const fftw_complex* spec, double add, std::span<double> out) {
    std::size_t cn = std::size_t(py) * cw;
    for (std::size_t p = 0; p < cn; ++p) {
      double ar = cbuf[p][0], ai = cbuf[p][1];
      double br = spec[p][0], bi = spec[p][1];
      ctmp[p][0] = ar * br - ai * bi;
      ctmp[p][1] = ar * bi + ai * br;
    }
    fftw_execute_dft_c2r(inv, ctmp, rbuf);
    for (int j = 0; j < grid.ny; ++j) {
      const double* src = rbuf + std::size_t(j + off_y) * px + off_x;
      double* dst = out.data() + std::size_t(j) * grid.nx;
      for (int i = 0; i < grid.nx; ++i) dst[i] = src[i] + add;
    }
  }
};

FastConvolver::FastConvolver(const Grid2D& grid, const KernelStencil& k,
                             boundary_mode mode, bool need_weights, bool need_gradient)
    : impl_(std::make_unique<impl>(grid, k, mode, need_weights, need_gradient)) {}

FastConvolver::~FastConvolver() = default;

void FastConvolver::convolve(std::span<const double> u, double far,
                             std::span<double> out) {
  impl_->load(u, far);
  impl_->apply(impl_->spec_w, far, out);
}

void FastConvolver::gradient(std::span<const double> v, double far_v,
                             std::span<double> ax, std::span<double> ay) {
  impl_->load(v, far_v);
  impl_->apply(impl_->spec_gx, 0.0, ax);
  impl_->apply(impl_->spec_gy, 0.0, ay);
}

void convolved_gradient(const Field& f, std::span<const double> coeffs,
                        FastConvolver& conv, std::span<double> ax,
                        std::span<double> ay, std::span<double> scratch) {
  const int n = f.n_components();
  double far_v = 0.0;
  for (int c = 0; c < n; ++c) far_v += coeffs[c] * f.far_field(c);
  std::fill(scratch.begin(), scratch.end(), 0.0);
  for (int c = 0; c < n; ++c) {
    auto u = f.component(c);
    double w = coeffs[c];
    for (std::size_t p = 0; p < u.size(); ++p) scratch[p] += w * u[p];
  }
  conv.gradient(scratch, far_v, ax, ay);
}

}  // namespace nbl
