#ifndef NBL_GRID_HPP
#define NBL_GRID_HPP

#include <span>
#include <string>
#include <vector>

#include "nbl/common.hpp"

namespace nbl {

/// How reads outside the computational window are resolved.
enum class boundary_mode { far_field, periodic };

/// Uniform Cartesian grid of cell averages. Cell (i,j) has its center at
/// (x_min + (i+0.5)dx, y_min + (j+0.5)dy), 0 <= i < nx, 0 <= j < ny.
struct Grid2D {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  int nx = 1, ny = 1;
  double dx = 1.0, dy = 1.0;

  std::size_t cells() const { return std::size_t(nx) * std::size_t(ny); }
  std::size_t index(int i, int j) const { return std::size_t(j) * nx + i; }
  Vec2 cell_center(int i, int j) const {
    return {x_min + (i + 0.5) * dx, y_min + (j + 0.5) * dy};
  }
  double cell_area() const { return dx * dy; }
  double diameter() const { return std::hypot(x_max - x_min, y_max - y_min); }
};

/// Builds a grid, rejecting degenerate extents or cell counts.
Grid2D make_grid(double x_min, double x_max, double y_min, double y_max,
                 int nx, int ny);

/// Multi-component cell-average data on a grid, plus the constant value each
/// component takes outside the window (used for ghost reads and convolution
/// extension).
class Field {
 public:
  Field() = default;
  Field(int n_components, const Grid2D& grid, std::vector<double> far_field);

  int n_components() const { return int(comps_.size()); }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

  std::span<double> component(int c) { return comps_.at(c); }
  std::span<const double> component(int c) const { return comps_.at(c); }
  std::vector<double>& component_vec(int c) { return comps_.at(c); }

  double far_field(int c) const { return far_.at(c); }
  const std::vector<double>& far_fields() const { return far_; }

  double& at(int c, int i, int j) { return comps_[c][std::size_t(j) * nx_ + i]; }
  double at(int c, int i, int j) const { return comps_[c][std::size_t(j) * nx_ + i]; }

  /// True when every value of every component is finite.
  bool finite() const;

 private:
  int nx_ = 0, ny_ = 0;
  std::vector<std::vector<double>> comps_;
  std::vector<double> far_;
};

/// Discrete integral sum u * dx * dy over all cells.
double integrate(const Field& f, int component, const Grid2D& grid);

/// Discrete L1 norm: sum |u| * dx * dy.
double l1_norm(const Field& f, int component, const Grid2D& grid);

/// Max |u| over cells.
double linf_norm(const Field& f, int component);

/// Anisotropic discrete total variation: axis-aligned jumps weighted by the
/// transverse spacing. In far-field mode each boundary cell contributes one
/// jump to the far-field value; in periodic mode jumps wrap around.
double total_variation(const Field& f, int component, const Grid2D& grid,
                       boundary_mode mode = boundary_mode::far_field);

double integrate(std::span<const double> u, const Grid2D& grid);
double l1_norm(std::span<const double> u, const Grid2D& grid);
double linf_norm(std::span<const double> u);
double total_variation(std::span<const double> u, const Grid2D& grid,
                       double far, boundary_mode mode = boundary_mode::far_field);

}  // namespace nbl

#endif
