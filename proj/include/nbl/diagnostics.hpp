#ifndef NBL_DIAGNOSTICS_HPP
#define NBL_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nbl/solver.hpp"

namespace nbl {

/// Cells where the solid height has dropped below zero ("the cut").
std::vector<std::uint8_t> cut_region(std::span<const double> h_s, const Grid2D& grid);

/// Per-column maximal |y| of cut cell centers; 0 for uncut columns.
std::vector<double> cut_half_width_profile(std::span<const double> h_s,
                                           const Grid2D& grid);

/// Restriction of the half-width profile to cut columns outside the drill
/// footprint (|x - hole_x| > exclude_radius), in column order.
std::vector<double> wake_profile(std::span<const double> profile, const Grid2D& grid,
                                 double hole_x, double exclude_radius);

struct RippleStats {
  int maxima = 0;        ///< interior local maxima after plateau merging
  double amplitude = 0;  ///< max - min of the profile
};

/// Counts plateau-merged strict interior maxima of the wake profile. Wakes
/// shorter than five columns carry no ripple information and report absent.
std::optional<RippleStats> ripple_stats(std::span<const double> wake);

/// Axis-aligned rectangle used for support-containment checks.
struct Rect {
  double x_lo, x_hi, y_lo, y_hi;
  bool contains(Vec2 p) const {
    return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
  }
};

/// Fraction of |rho| mass carried by cells whose centers lie outside B.
double outside_mass_fraction(std::span<const double> rho, const Grid2D& grid, Rect b);

/// Max |u(i,j) - u(i, ny-1-j)| over cells. Requires an even row count and a
/// domain symmetric about y = 0.
double symmetry_defect(std::span<const double> u, const Grid2D& grid);

/// L1 distance of two runs' snapshot fields nearest to time t, divided by
/// the initial L1 perturbation size delta. The runs must share grid,
/// snapshot schedule, and retained fields.
double lipschitz_ratio(const RunRecord& u, const RunRecord& w, double delta, double t);

}  // namespace nbl

#endif
