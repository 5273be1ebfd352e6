#include "nbl/solver.hpp"

#include <algorithm>
#include <cmath>

namespace nbl {

void SolverConfig::validate() const {
  if (!(cfl > 0.0) || !(cfl < 1.0))
    throw config_error("solver.cfl: require 0 < cfl < 1");
  if (t_end < 0.0) throw config_error("solver.t_end: must be nonnegative");
  if (snapshots < 1) throw config_error("solver.snapshots: must be at least 1");
  if (dt_max && !(*dt_max > 0.0)) throw config_error("solver.dt_max: must be positive");
  if (fixed_dt && !(*fixed_dt > 0.0)) throw config_error("solver.fixed_dt: must be positive");
  if (!(blowup_ceiling > 0.0)) throw config_error("solver.blowup_ceiling: must be positive");
}

std::size_t RunRecord::column_index(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return k;
  throw std::out_of_range("RunRecord: no column named " + name);
}

double RunRecord::value(std::size_t row, const std::string& column) const {
  return rows.at(row).at(column_index(column));
}

std::vector<double> RunRecord::series(const std::string& column) const {
  std::size_t k = column_index(column);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(k));
  return out;
}

Solver::Solver(const Model& model, const Grid2D& grid, SolverConfig cfg)
    : model_(model), grid_(grid), cfg_(cfg) {
  cfg_.validate();
  st_.field = Field(model.n_components(), grid, model.far_field());
  std::size_t n = grid.cells();
  ax_.assign(n, 0.0);
  ay_.assign(n, 0.0);
  scratch_.assign(n, 0.0);
  int line = std::max(grid.nx, grid.ny) + 2;
  line_u_.assign(line, 0.0);
  line_f_.assign(line, 0.0);
  line_out_.assign(line, 0.0);
  if (model.kind() != nonlocal_kind::none) {
    KernelStencil k = discretize_kernel(model.kernel_profile(), grid.dx, grid.dy);
    conv_.emplace(grid, k, cfg_.boundary,
                  model.kind() == nonlocal_kind::convolution,
                  model.kind() == nonlocal_kind::gradient_of_sum);
  }
}

void Solver::set_state(Field field, double t) {
  if (field.n_components() != model_.n_components())
    throw config_error("Solver::set_state: component count mismatch");
  st_.field = std::move(field);
  st_.t = t;
  st_.step = 0;
}

double Solver::stable_dt() const {
  double remaining = cfg_.t_end - st_.t;
  double speed = model_.wave_speed_bound(st_.field, grid_);
  if (!std::isfinite(speed)) return std::numeric_limits<double>::quiet_NaN();
  double cfl_dt = cfg_.cfl * std::min(grid_.dx, grid_.dy) / std::max(speed, 1e-30);
  double dt = cfl_dt;
  if (cfg_.dt_max) dt = std::min(dt, *cfg_.dt_max);
  if (cfg_.fixed_dt) {
    dt = *cfg_.fixed_dt;
    if (dt > cfl_dt && !cfl_warned_) cfl_warned_ = true;
  }
  if (remaining > 0.0) dt = std::min(dt, remaining);
  return dt;
}

void Solver::compute_nonlocal() {
  switch (model_.kind()) {
    case nonlocal_kind::none:
      return;  // ax_, ay_ stay zero
    case nonlocal_kind::gradient_of_sum:
      convolved_gradient(st_.field, model_.nonlocal_weights(), *conv_, ax_, ay_, scratch_);
      return;
    case nonlocal_kind::convolution: {
      const auto& w = model_.nonlocal_weights();
      double far_v = 0.0;
      for (int c = 0; c < model_.n_components(); ++c)
        far_v += w[c] * st_.field.far_field(c);
      std::fill(scratch_.begin(), scratch_.end(), 0.0);
      for (int c = 0; c < model_.n_components(); ++c) {
        auto u = st_.field.component(c);
        for (std::size_t p = 0; p < u.size(); ++p) scratch_[p] += w[c] * u[p];
      }
      conv_->convolve(scratch_, far_v, ax_);
      std::fill(ay_.begin(), ay_.end(), 0.0);
      return;
    }
  }
}

void Solver::sweep_x(int c, double dt) {
  const int nx = grid_.nx, ny = grid_.ny;
  const bool periodic = cfg_.boundary == boundary_mode::periodic;
  const double far = st_.field.far_field(c);
  const double lam = dt / (2.0 * grid_.dx);
  auto& u = st_.field.component_vec(c);
  double* uline = line_u_.data() + 1;   // index -1..nx
  double* fline = line_f_.data() + 1;
  for (int j = 0; j < ny; ++j) {
    const double* row = u.data() + std::size_t(j) * nx;
    for (int i = 0; i < nx; ++i) uline[i] = row[i];
    uline[-1] = periodic ? row[nx - 1] : far;
    uline[nx] = periodic ? row[0] : far;
    for (int i = -1; i <= nx; ++i) {
      int ia = periodic ? (i + nx) % nx : std::clamp(i, 0, nx - 1);
      std::size_t pa = std::size_t(j) * nx + ia;
      Vec2 x = grid_.cell_center(i, j);
      fline[i] = model_.flux(st_.t, x, c, uline[i], {ax_[pa], ay_[pa]}).x;
    }
    for (int i = 0; i < nx; ++i)
      line_out_[i] = 0.5 * (uline[i - 1] + uline[i + 1]) - lam * (fline[i + 1] - fline[i - 1]);
    double* out = u.data() + std::size_t(j) * nx;
    for (int i = 0; i < nx; ++i) out[i] = line_out_[i];
  }
}

void Solver::sweep_y(int c, double dt) {
  const int nx = grid_.nx, ny = grid_.ny;
  const bool periodic = cfg_.boundary == boundary_mode::periodic;
  const double far = st_.field.far_field(c);
  const double lam = dt / (2.0 * grid_.dy);
  auto& u = st_.field.component_vec(c);
  double* uline = line_u_.data() + 1;   // index -1..ny
  double* fline = line_f_.data() + 1;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) uline[j] = u[std::size_t(j) * nx + i];
    uline[-1] = periodic ? u[std::size_t(ny - 1) * nx + i] : far;
    uline[ny] = periodic ? u[i] : far;
    for (int j = -1; j <= ny; ++j) {
      int ja = periodic ? (j + ny) % ny : std::clamp(j, 0, ny - 1);
      std::size_t pa = std::size_t(ja) * nx + i;
      Vec2 x = grid_.cell_center(i, j);
      fline[j] = model_.flux(st_.t, x, c, uline[j], {ax_[pa], ay_[pa]}).y;
    }
    for (int j = 0; j < ny; ++j)
      line_out_[j] = 0.5 * (uline[j - 1] + uline[j + 1]) - lam * (fline[j + 1] - fline[j - 1]);
    for (int j = 0; j < ny; ++j) u[std::size_t(j) * nx + i] = line_out_[j];
  }
}

void Solver::convective_step(double dt) {
  for (int c = 0; c < model_.n_components(); ++c)
    if (model_.flux_active(c)) sweep_x(c, dt);
  for (int c = 0; c < model_.n_components(); ++c)
    if (model_.flux_active(c)) sweep_y(c, dt);
}

void Solver::source_step(double dt) {
  const int n = model_.n_components();
  const int nx = grid_.nx, ny = grid_.ny;
  std::vector<double> uval(n), rate(n);
  std::vector<std::span<double>> comps(n);
  for (int c = 0; c < n; ++c) comps[c] = st_.field.component(c);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      std::size_t p = std::size_t(j) * nx + i;
      for (int c = 0; c < n; ++c) uval[c] = comps[c][p];
      model_.source(st_.t, grid_.cell_center(i, j), uval, {ax_[p], ay_[p]}, rate);
      for (int c = 0; c < n; ++c) comps[c][p] += dt * rate[c];
    }
}

std::optional<double> Solver::step() {
  double dt = stable_dt();
  if (!std::isfinite(dt) || !(dt > 0.0)) return std::nullopt;
  compute_nonlocal();
  convective_step(dt);
  source_step(dt);
  for (int c = 0; c < model_.n_components(); ++c) {
    auto u = st_.field.component(c);
    for (double v : u)
      if (!std::isfinite(v) || std::abs(v) > cfg_.blowup_ceiling) return std::nullopt;
  }
  st_.t += dt;
  st_.step += 1;
  return dt;
}

RunRecord Solver::run(Field initial, const std::vector<Metric>& metrics,
                      const std::function<void(const State&, int)>& on_snapshot) {
  set_state(std::move(initial), 0.0);
  RunRecord rec;
  rec.grid = grid_;
  rec.cfl = cfg_.cfl;
  rec.fixed_dt_used = cfg_.fixed_dt.has_value();
  rec.columns.push_back("t");
  const int n = model_.n_components();
  for (int c = 0; c < n; ++c) {
    std::string nm = model_.component_name(c);
    rec.columns.push_back("mass_" + nm);
    rec.columns.push_back("l1_" + nm);
    rec.columns.push_back("linf_" + nm);
    rec.columns.push_back("tv_" + nm);
  }
  for (const auto& m : metrics) rec.columns.push_back(m.name);

  int snap_idx = 0;
  auto take_snapshot = [&]() {
    std::vector<double> row;
    row.reserve(rec.columns.size());
    row.push_back(st_.t);
    for (int c = 0; c < n; ++c) {
      row.push_back(integrate(st_.field, c, grid_));
      row.push_back(l1_norm(st_.field, c, grid_));
      row.push_back(linf_norm(st_.field, c));
      row.push_back(total_variation(st_.field, c, grid_, cfg_.boundary));
    }
    for (const auto& m : metrics) row.push_back(m.fn(st_));
    rec.rows.push_back(std::move(row));
    rec.times_.push_back(st_.t);
    if (cfg_.keep_fields) rec.snapshot_fields.push_back(st_.field);
    if (on_snapshot) on_snapshot(st_, snap_idx);
    ++snap_idx;
  };

  take_snapshot();
  const double t_end = cfg_.t_end;
  const double eps = 1e-12 * std::max(1.0, t_end);
  int next_target = 1;
  while (t_end - st_.t > eps) {
    auto dt = step();
    if (!dt) {
      rec.halt = halt_reason::blow_up;
      rec.halt_time = st_.t;
      rec.cfl_exceeded_warning = cfl_warned_;
      return rec;
    }
    bool due = false;
    while (next_target <= cfg_.snapshots &&
           st_.t >= double(next_target) / cfg_.snapshots * t_end - *dt / 2.0) {
      ++next_target;
      due = true;
    }
    if (due) take_snapshot();
  }
  if (rec.times_.empty() || rec.times_.back() < st_.t) take_snapshot();
  rec.halt = halt_reason::completed;
  rec.halt_time = st_.t;
  rec.cfl_exceeded_warning = cfl_warned_;
  return rec;
}

}  // namespace nbl
