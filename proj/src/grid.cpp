#include "nbl/grid.hpp"

#include <cmath>

namespace nbl {

Grid2D make_grid(double x_min, double x_max, double y_min, double y_max,
                 int nx, int ny) {
  if (!(x_max > x_min) || !(y_max > y_min))
    throw config_error("make_grid: degenerate extents (require x_max > x_min, y_max > y_min)");
  if (nx < 1 || ny < 1)
    throw config_error("make_grid: cell counts must be at least 1");
  Grid2D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  g.nx = nx;
  g.ny = ny;
  g.dx = (x_max - x_min) / nx;
  g.dy = (y_max - y_min) / ny;
  return g;
}

Field::Field(int n_components, const Grid2D& grid, std::vector<double> far_field)
    : nx_(grid.nx), ny_(grid.ny), far_(std::move(far_field)) {
  if (int(far_.size()) != n_components)
    throw config_error("Field: far_field size does not match component count");
  comps_.assign(n_components, std::vector<double>(grid.cells(), 0.0));
}

bool Field::finite() const {
  for (const auto& c : comps_)
    for (double v : c)
      if (!std::isfinite(v)) return false;
  return true;
}

double integrate(std::span<const double> u, const Grid2D& grid) {
  kahan_sum s;
  for (double v : u) s.add(v);
  return s.value() * grid.cell_area();
}

double l1_norm(std::span<const double> u, const Grid2D& grid) {
  kahan_sum s;
  for (double v : u) s.add(std::abs(v));
  return s.value() * grid.cell_area();
}

double linf_norm(std::span<const double> u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

double total_variation(std::span<const double> u, const Grid2D& grid,
                       double far, boundary_mode mode) {
  const int nx = grid.nx, ny = grid.ny;
  auto at = [&](int i, int j) { return u[std::size_t(j) * nx + i]; };
  kahan_sum jx;  // jumps across x-faces, weighted by dy
  kahan_sum jy;  // jumps across y-faces, weighted by dx
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) jx.add(std::abs(at(i + 1, j) - at(i, j)));
    if (mode == boundary_mode::far_field) {
      jx.add(std::abs(at(0, j) - far));
      jx.add(std::abs(at(nx - 1, j) - far));
    } else {
      jx.add(std::abs(at(0, j) - at(nx - 1, j)));
    }
  }
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j + 1 < ny; ++j) jy.add(std::abs(at(i, j + 1) - at(i, j)));
    if (mode == boundary_mode::far_field) {
      jy.add(std::abs(at(i, 0) - far));
      jy.add(std::abs(at(i, ny - 1) - far));
    } else {
      jy.add(std::abs(at(i, 0) - at(i, ny - 1)));
    }
  }
  return jx.value() * grid.dy + jy.value() * grid.dx;
}

double integrate(const Field& f, int component, const Grid2D& grid) {
  return integrate(f.component(component), grid);
}

double l1_norm(const Field& f, int component, const Grid2D& grid) {
  return l1_norm(f.component(component), grid);
}

double linf_norm(const Field& f, int component) {
  return linf_norm(f.component(component));
}

double total_variation(const Field& f, int component, const Grid2D& grid,
                       boundary_mode mode) {
  return total_variation(f.component(component), grid, f.far_field(component), mode);
}

}  // namespace nbl
