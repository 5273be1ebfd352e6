#include "nbl/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nbl/models/advection.hpp"

namespace nbl {

namespace {

std::vector<Metric> laser_metrics(const Grid2D& grid, const LaserParams& p) {
  std::vector<Metric> m;
  m.push_back({"cut_area", [grid](const State& s) {
                 double n = 0;
                 for (double v : s.field.component(1))
                   if (v < 0.0) n += 1.0;
                 return n * grid.cell_area();
               }});
  m.push_back({"cut_columns", [grid](const State& s) {
                 auto prof = cut_half_width_profile(s.field.component(1), grid);
                 double n = 0;
                 for (double w : prof)
                   if (w > 0.0) n += 1.0;
                 return n;
               }});
  m.push_back({"ripple_count", [grid, p](const State& s) {
                 auto prof = cut_half_width_profile(s.field.component(1), grid);
                 auto wake = wake_profile(prof, grid, p.hold_point.x, p.exclude_radius);
                 auto rs = ripple_stats(wake);
                 return rs ? double(rs->maxima) : std::nan("");
               }});
  m.push_back({"ripple_amplitude", [grid, p](const State& s) {
                 auto prof = cut_half_width_profile(s.field.component(1), grid);
                 auto wake = wake_profile(prof, grid, p.hold_point.x, p.exclude_radius);
                 auto rs = ripple_stats(wake);
                 return rs ? rs->amplitude : std::nan("");
               }});
  bool mirror = grid.ny % 2 == 0 &&
                std::abs(grid.y_min + grid.y_max) <=
                    1e-12 * std::max(1.0, std::abs(grid.y_max));
  if (mirror)
    m.push_back({"symmetry_defect", [grid](const State& s) {
                   double d = 0.0;
                   for (int c = 0; c < s.field.n_components(); ++c)
                     d = std::max(d, symmetry_defect(s.field.component(c), grid));
                   return d;
                 }});
  return m;
}

std::vector<Metric> conveyor_metrics(const Grid2D& grid, const ConveyorParams& p) {
  Rect belt{0.0, p.length, -p.half_width, p.half_width};
  std::vector<Metric> m;
  m.push_back({"outside_mass_fraction", [grid, belt](const State& s) {
                 return outside_mass_fraction(s.field.component(0), grid, belt);
               }});
  m.push_back({"min_rho", [](const State& s) {
                 double mn = std::numeric_limits<double>::infinity();
                 for (double v : s.field.component(0)) mn = std::min(mn, v);
                 return mn;
               }});
  m.push_back({"max_rho", [](const State& s) {
                 double mx = -std::numeric_limits<double>::infinity();
                 for (double v : s.field.component(0)) mx = std::max(mx, v);
                 return mx;
               }});
  return m;
}

std::vector<Metric> blowup_metrics(const Grid2D& grid) {
  return {{"u_center", [grid](const State& s) {
             return s.field.at(0, grid.nx / 2, grid.ny / 2);
           }}};
}

}  // namespace

Scenario build_scenario(const ScenarioConfig& cfg) {
  Scenario sc;
  sc.kind = cfg.kind;
  sc.grid = cfg.grid;
  sc.solver = cfg.solver;
  sc.output = cfg.output;
  switch (cfg.kind) {
    case scenario_kind::laser: {
      LaserParams p = cfg.laser;
      p.resolve_cutoff(cfg.grid);
      auto model = std::make_unique<LaserModel>(p);
      sc.initial = Field(2, cfg.grid, model->far_field());
      auto hs = sc.initial.component(1);
      std::fill(hs.begin(), hs.end(), p.plate_thickness);
      sc.metrics = laser_metrics(cfg.grid, p);
      sc.model = std::move(model);
      break;
    }
    case scenario_kind::conveyor: {
      auto model = std::make_unique<ConveyorModel>(cfg.conveyor);
      sc.initial = Field(1, cfg.grid, model->far_field());
      sc.metrics = conveyor_metrics(cfg.grid, cfg.conveyor);
      sc.model = std::move(model);
      break;
    }
    case scenario_kind::blowup_homogeneous: {
      auto model = std::make_unique<BlowupModel>(cfg.blowup);
      sc.initial = Field(1, cfg.grid, model->far_field());
      auto u = sc.initial.component(0);
      std::fill(u.begin(), u.end(), cfg.blowup.initial_value);
      sc.metrics = blowup_metrics(cfg.grid);
      sc.model = std::move(model);
      break;
    }
    case scenario_kind::blowup_psi: {
      auto model = std::make_unique<BlowupModel>(cfg.blowup);
      sc.initial = Field(1, cfg.grid, model->far_field());
      for (int j = 0; j < cfg.grid.ny; ++j)
        for (int i = 0; i < cfg.grid.nx; ++i)
          sc.initial.at(0, i, j) = blowup_psi(cfg.grid.cell_center(i, j).norm());
      sc.metrics = blowup_metrics(cfg.grid);
      sc.model = std::move(model);
      break;
    }
    case scenario_kind::custom: {
      const AdvectionParams& p = cfg.advection;
      auto model = std::make_unique<AdvectionModel>(p.velocity_x, p.velocity_y);
      sc.initial = Field(1, cfg.grid, model->far_field());
      BumpProfile bump{p.bump_amplitude, p.bump_radius, 3};
      for (int j = 0; j < cfg.grid.ny; ++j)
        for (int i = 0; i < cfg.grid.nx; ++i)
          sc.initial.at(0, i, j) =
              bump.value((cfg.grid.cell_center(i, j) - p.bump_center).norm());
      sc.model = std::move(model);
      break;
    }
  }
  return sc;
}

}  // namespace nbl
