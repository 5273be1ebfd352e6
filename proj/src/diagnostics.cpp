#include "nbl/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace nbl {

std::vector<std::uint8_t> cut_region(std::span<const double> h_s, const Grid2D& grid) {
  std::vector<std::uint8_t> mask(grid.cells(), 0);
  for (std::size_t p = 0; p < mask.size(); ++p) mask[p] = h_s[p] < 0.0 ? 1 : 0;
  return mask;
}

std::vector<double> cut_half_width_profile(std::span<const double> h_s,
                                           const Grid2D& grid) {
  std::vector<double> prof(grid.nx, 0.0);
  for (int i = 0; i < grid.nx; ++i) {
    double w = 0.0;
    for (int j = 0; j < grid.ny; ++j)
      if (h_s[grid.index(i, j)] < 0.0)
        w = std::max(w, std::abs(grid.cell_center(i, j).y));
    prof[i] = w;
  }
  return prof;
}

std::vector<double> wake_profile(std::span<const double> profile, const Grid2D& grid,
                                 double hole_x, double exclude_radius) {
  std::vector<double> wake;
  for (int i = 0; i < grid.nx; ++i) {
    if (profile[i] <= 0.0) continue;
    if (std::abs(grid.cell_center(i, 0).x - hole_x) <= exclude_radius) continue;
    wake.push_back(profile[i]);
  }
  return wake;
}

std::optional<RippleStats> ripple_stats(std::span<const double> wake) {
  if (wake.size() < 5) return std::nullopt;
  // Merge plateaus so flat segments created by grid quantization count once.
  std::vector<double> runs;
  for (double v : wake)
    if (runs.empty() || v != runs.back()) runs.push_back(v);
  RippleStats s;
  for (std::size_t k = 1; k + 1 < runs.size(); ++k)
    if (runs[k] > runs[k - 1] && runs[k] > runs[k + 1]) ++s.maxima;
  auto [mn, mx] = std::minmax_element(wake.begin(), wake.end());
  s.amplitude = *mx - *mn;
  return s;
}

double outside_mass_fraction(std::span<const double> rho, const Grid2D& grid, Rect b) {
  kahan_sum outside, total;
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      double v = std::abs(rho[grid.index(i, j)]);
      total.add(v);
      if (!b.contains(grid.cell_center(i, j))) outside.add(v);
    }
  double tot = total.value() * grid.cell_area();
  return outside.value() * grid.cell_area() / std::max(tot, 1e-30);
}

double symmetry_defect(std::span<const double> u, const Grid2D& grid) {
  if (grid.ny % 2 != 0)
    throw config_error("symmetry_defect: requires an even row count");
  double span = std::max(std::abs(grid.y_min), std::abs(grid.y_max));
  if (std::abs(grid.y_min + grid.y_max) > 1e-12 * std::max(1.0, span))
    throw config_error("symmetry_defect: domain is not symmetric about y = 0");
  double d = 0.0;
  for (int j = 0; j < grid.ny / 2; ++j)
    for (int i = 0; i < grid.nx; ++i)
      d = std::max(d, std::abs(u[grid.index(i, j)] - u[grid.index(i, grid.ny - 1 - j)]));
  return d;
}

double lipschitz_ratio(const RunRecord& u, const RunRecord& w, double delta, double t) {
  if (!(delta > 0.0)) throw config_error("lipschitz_ratio: delta must be positive");
  if (u.grid.nx != w.grid.nx || u.grid.ny != w.grid.ny ||
      u.grid.dx != w.grid.dx || u.grid.dy != w.grid.dy)
    throw config_error("lipschitz_ratio: runs use different grids");
  if (u.snapshot_fields.empty() || w.snapshot_fields.empty())
    throw config_error("lipschitz_ratio: runs were recorded without snapshot fields");
  if (u.times().size() != w.times().size())
    throw config_error("lipschitz_ratio: runs have different snapshot schedules");
  for (std::size_t k = 0; k < u.times().size(); ++k)
    if (std::abs(u.times()[k] - w.times()[k]) > 1e-9 * std::max(1.0, std::abs(t)))
      throw config_error("lipschitz_ratio: snapshot times do not line up");

  std::size_t best = 0;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < u.times().size(); ++k) {
    double g = std::abs(u.times()[k] - t);
    if (g < gap) {
      gap = g;
      best = k;
    }
  }
  const Field& fu = u.snapshot_fields.at(best);
  const Field& fw = w.snapshot_fields.at(best);
  if (fu.n_components() != fw.n_components())
    throw config_error("lipschitz_ratio: component count mismatch");
  kahan_sum diff;
  for (int c = 0; c < fu.n_components(); ++c) {
    auto a = fu.component(c);
    auto b = fw.component(c);
    for (std::size_t p = 0; p < a.size(); ++p) diff.add(std::abs(a[p] - b[p]));
  }
  return diff.value() * u.grid.cell_area() / delta;
}

}  // namespace nbl
