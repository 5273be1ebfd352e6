#ifndef NBL_SOLVER_HPP
#define NBL_SOLVER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nbl/convolution.hpp"
#include "nbl/model.hpp"

namespace nbl {

struct SolverConfig {
  double cfl = 0.45;
  double t_end = 0.0;
  std::optional<double> dt_max;
  std::optional<double> fixed_dt;  ///< overrides the CFL value when set
  int snapshots = 20;              ///< evenly spaced diagnostic times after t = 0
  double blowup_ceiling = 1e6;     ///< sup-norm ceiling triggering a halt
  boundary_mode boundary = boundary_mode::far_field;
  bool keep_fields = false;        ///< retain snapshot fields in the record

  void validate() const;
};

struct State {
  double t = 0.0;
  long step = 0;
  Field field;
};

/// A named scenario observable evaluated at snapshot times.
struct Metric {
  std::string name;
  std::function<double(const State&)> fn;
};

enum class halt_reason { completed, blow_up };

/// Time series of diagnostics plus optional snapshot fields.
struct RunRecord {
  Grid2D grid;
  std::vector<std::string> columns;        ///< "t", per-component stats, metrics
  std::vector<std::vector<double>> rows;   ///< one row per snapshot
  std::vector<Field> snapshot_fields;      ///< populated when keep_fields
  halt_reason halt = halt_reason::completed;
  double halt_time = 0.0;
  double cfl = 0.0;                        ///< recorded for reproducibility
  bool fixed_dt_used = false;
  bool cfl_exceeded_warning = false;       ///< fixed_dt ran above the CFL value

  std::size_t column_index(const std::string& name) const;
  double value(std::size_t row, const std::string& column) const;
  std::vector<double> series(const std::string& column) const;
  const std::vector<double>& times() const { return times_; }
  std::vector<double> times_;
};

/// Fractional-step integrator: per step the nonlocal term is frozen, the
/// convective part advances by dimensional Lax-Friedrichs sweeps (x1 then
/// x2), and the sources by one explicit Euler step.
class Solver {
 public:
  Solver(const Model& model, const Grid2D& grid, SolverConfig cfg);

  void set_state(Field field, double t = 0.0);
  State& state() { return st_; }
  const State& state() const { return st_; }
  const Grid2D& grid() const { return grid_; }
  const SolverConfig& config() const { return cfg_; }

  /// CFL time step for the current state: cfl * min(dx,dy) / wave speed,
  /// clamped by dt_max and the remaining time; fixed_dt takes precedence.
  /// Returns NaN when the wave-speed bound is not finite.
  double stable_dt() const;

  /// Evaluates the model's nonlocal term on the current field.
  void compute_nonlocal();

  /// One Lax-Friedrichs sweep per direction for every flux-carrying
  /// component, against the frozen nonlocal term. The caller guarantees the
  /// CFL bound for dt.
  void convective_step(double dt);

  /// Explicit Euler update u += dt * source against the frozen term.
  void source_step(double dt);

  /// Full fractional step. Returns the dt taken, or nullopt when the step
  /// produced a non-finite or ceiling-exceeding state (blow-up); in that
  /// case the state time still points at the last good time.
  std::optional<double> step();

  /// Integrates to t_end, recording diagnostics at the snapshot cadence.
  RunRecord run(Field initial, const std::vector<Metric>& metrics = {},
                const std::function<void(const State&, int)>& on_snapshot = {});

  std::span<const double> nonlocal_x() const { return ax_; }
  std::span<const double> nonlocal_y() const { return ay_; }
  bool cfl_warning_raised() const { return cfl_warned_; }

 private:
  void sweep_x(int c, double dt);
  void sweep_y(int c, double dt);

  const Model& model_;
  Grid2D grid_;
  SolverConfig cfg_;
  State st_;
  std::optional<FastConvolver> conv_;
  std::vector<double> ax_, ay_, scratch_, line_u_, line_f_, line_out_;
  mutable bool cfl_warned_ = false;
};

}  // namespace nbl

#endif
