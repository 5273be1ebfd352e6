#include "nbl/runner.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nbl/io.hpp"

namespace nbl {

namespace {

namespace fs = std::filesystem;

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create output directory '" + dir + "': " + ec.message());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw io_error("write failed: " + path);
}

std::string snapshot_name(int idx, const char* ext) {
  char b[64];
  std::snprintf(b, sizeof b, "snapshot_%03d.%s", idx, ext);
  return b;
}

ScenarioConfig with_overrides(ScenarioConfig cfg, const RunOptions& opt) {
  if (opt.output_dir) cfg.output.directory = *opt.output_dir;
  if (opt.snapshots) {
    cfg.solver.snapshots = *opt.snapshots;
    cfg.solver.validate();
  }
  return cfg;
}

}  // namespace

RunOutcome run_command(const ScenarioConfig& cfg_in, const RunOptions& opt) {
  ScenarioConfig cfg = with_overrides(cfg_in, opt);
  Scenario sc = build_scenario(cfg);
  const std::string dir = cfg.output.directory;
  ensure_dir(dir);
  write_text(dir + "/effective.cfg", render_effective_config(cfg));

  std::vector<std::string> names;
  for (int c = 0; c < sc.model->n_components(); ++c)
    names.push_back(sc.model->component_name(c));

  Solver solver(*sc.model, sc.grid, sc.solver);
  auto on_snapshot = [&](const State& s, int idx) {
    if (cfg.output.write_dump)
      write_field_dump(dir + "/" + snapshot_name(idx, "dat"),
                       FieldDump{sc.grid, s.t, names, s.field});
    if (cfg.output.write_pgm)
      write_pgm(dir + "/" + snapshot_name(idx, "pgm"),
                s.field.component(cfg.output.contour_component), sc.grid,
                cfg.output.contour_min, cfg.output.contour_max);
  };
  RunRecord rec = solver.run(std::move(sc.initial), sc.metrics, on_snapshot);
  if (cfg.output.write_csv) write_csv(dir + "/timeseries.csv", rec.columns, rec.rows);

  if (!opt.quiet) {
    std::printf("scenario %s: %zu snapshots, t = %.6g", to_string(cfg.kind),
                rec.rows.size(), rec.halt_time);
    if (rec.halt == halt_reason::blow_up)
      std::printf("  [HALTED: blow-up detected; last good time %.6g]", rec.halt_time);
    std::printf("\n");
    if (rec.cfl_exceeded_warning)
      std::printf("warning: fixed_dt exceeded the CFL-stable value during the run\n");
    if (!rec.rows.empty()) {
      const auto& last = rec.rows.back();
      for (std::size_t k = 0; k < rec.columns.size(); ++k)
        std::printf("  final %-22s %.10g\n", rec.columns[k].c_str(), last[k]);
    }
  }
  return {std::move(rec), dir};
}

PerturbationSpec parse_perturbation(const std::string& spec) {
  PerturbationSpec p;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw config_error("perturbation: expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    auto to_num = [&](const std::string& v) {
      char* end = nullptr;
      double x = std::strtod(v.c_str(), &end);
      if (end == v.c_str() || *end != '\0')
        throw config_error("perturbation." + key + ": bad number '" + v + "'");
      return x;
    };
    if (key == "component")
      p.component = int(to_num(val));
    else if (key == "shape")
      p.shape = val;
    else if (key == "center_x")
      p.center.x = to_num(val);
    else if (key == "center_y")
      p.center.y = to_num(val);
    else if (key == "radius")
      p.radius = to_num(val);
    else if (key == "deltas") {
      std::istringstream ds(val);
      std::string d;
      while (std::getline(ds, d, ':')) p.deltas.push_back(to_num(d));
    } else {
      throw config_error("perturbation: unknown key '" + key + "'");
    }
  }
  if (p.shape != "bump")
    throw config_error("perturbation.shape: only 'bump' is supported");
  if (p.deltas.empty()) throw config_error("perturbation: no deltas given");
  for (double d : p.deltas)
    if (!(d > 0.0)) throw config_error("perturbation: deltas must be positive");
  if (!(p.radius > 0.0)) throw config_error("perturbation.radius: must be positive");
  return p;
}

CompareOutcome compare_command(const ScenarioConfig& cfg_in, const PerturbationSpec& pert,
                               const RunOptions& opt) {
  ScenarioConfig cfg = with_overrides(cfg_in, opt);
  cfg.solver.keep_fields = true;
  {
    Scenario probe = build_scenario(cfg);
    if (pert.component < 0 || pert.component >= probe.model->n_components())
      throw config_error("perturbation.component: out of range");
    // Paired runs must share the time grid; freeze dt from the initial wave
    // speed with headroom for growth.
    if (!cfg.solver.fixed_dt) {
      double speed0 = probe.model->wave_speed_bound(probe.initial, probe.grid);
      double dt = cfg.solver.cfl * std::min(probe.grid.dx, probe.grid.dy) /
                  std::max(4.0 * speed0, 1e-30);
      cfg.solver.fixed_dt = dt;
    }
  }
  const std::string dir = cfg.output.directory;
  ensure_dir(dir);
  write_text(dir + "/effective.cfg", render_effective_config(cfg));

  auto run_one = [&](double delta) {
    Scenario sc = build_scenario(cfg);
    if (delta > 0.0) {
      BumpProfile bump{1.0, pert.radius, 3};
      auto u = sc.initial.component(pert.component);
      std::vector<double> shape(u.size());
      for (int j = 0; j < sc.grid.ny; ++j)
        for (int i = 0; i < sc.grid.nx; ++i)
          shape[sc.grid.index(i, j)] =
              bump.value((sc.grid.cell_center(i, j) - pert.center).norm());
      double l1 = l1_norm(shape, sc.grid);
      if (!(l1 > 0.0))
        throw config_error("perturbation bump has no mass on the grid");
      double scale = delta / l1;
      for (std::size_t k = 0; k < u.size(); ++k) u[k] += scale * shape[k];
    }
    Solver solver(*sc.model, sc.grid, sc.solver);
    return solver.run(std::move(sc.initial), sc.metrics);
  };

  RunRecord base = run_one(0.0);
  CompareOutcome out;
  out.deltas = pert.deltas;
  out.times = base.times();
  out.ratios.assign(out.times.size(), std::vector<double>(pert.deltas.size(), 0.0));
  out.output_dir = dir;
  for (std::size_t d = 0; d < pert.deltas.size(); ++d) {
    RunRecord pr = run_one(pert.deltas[d]);
    for (std::size_t s = 0; s < out.times.size(); ++s)
      out.ratios[s][d] = lipschitz_ratio(base, pr, pert.deltas[d], out.times[s]);
  }

  std::vector<std::string> cols{"t"};
  for (double d : pert.deltas) cols.push_back("ratio_delta_" + format_g17(d));
  std::vector<std::vector<double>> rows;
  for (std::size_t s = 0; s < out.times.size(); ++s) {
    std::vector<double> row{out.times[s]};
    row.insert(row.end(), out.ratios[s].begin(), out.ratios[s].end());
    rows.push_back(std::move(row));
  }
  write_csv(dir + "/lipschitz.csv", cols, rows);
  if (!opt.quiet) {
    std::printf("lipschitz ratios (rows: t, columns: delta)\n");
    for (std::size_t s = 0; s < out.times.size(); ++s) {
      std::printf("  t=%-10.6g", out.times[s]);
      for (double r : out.ratios[s]) std::printf(" %12.6g", r);
      std::printf("\n");
    }
  }
  return out;
}

OracleOutcome oracle_command(const std::vector<int>& sizes, std::uint64_t seed) {
  OracleOutcome out;
  for (int n : sizes) {
    if (n < 1) throw config_error("oracle: sizes must be positive");
    Grid2D grid = make_grid(0.0, 1.0, 0.0, 1.0, n, n);
    // Stencil of about 24 cells, matching the reference discretization case.
    double radius = 24.0 * grid.dx;
    radius = std::min(radius, 0.45);  // keep the support inside the window
    radius = std::max(radius, std::max(grid.dx, grid.dy));
    KernelStencil k = discretize_kernel(BumpProfile{1.0, radius, 3}, grid.dx, grid.dy);
    std::mt19937_64 rng(seed + std::uint64_t(n));
    std::vector<double> u(grid.cells());
    for (double& v : u)
      v = 2.0 * (double(rng() >> 11) * (1.0 / 9007199254740992.0)) - 1.0;
    Extension ext{boundary_mode::far_field, 0.0};

    FastConvolver fast(grid, k, ext.mode, true, true);
    std::vector<double> got(grid.cells()), gx(grid.cells()), gy(grid.cells());
    fast.convolve(u, ext.far, got);
    std::vector<double> want = convolve_direct(u, k, grid, ext);
    double dev = 0.0;
    for (std::size_t p = 0; p < got.size(); ++p)
      dev = std::max(dev, std::abs(got[p] - want[p]));

    fast.gradient(u, ext.far, gx, gy);
    std::vector<double> wx(grid.cells()), wy(grid.cells());
    convolved_gradient_direct(u, k, grid, ext, wx, wy);
    double devg = 0.0;
    for (std::size_t p = 0; p < gx.size(); ++p) {
      devg = std::max(devg, std::abs(gx[p] - wx[p]));
      devg = std::max(devg, std::abs(gy[p] - wy[p]));
    }

    out.sizes.push_back(n);
    out.max_deviation.push_back(dev);
    out.max_deviation_grad.push_back(devg);
    if (dev > out.tolerance || devg > out.tolerance) out.pass = false;
  }
  return out;
}

}  // namespace nbl
