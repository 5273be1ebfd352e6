#ifndef NBL_RUNNER_HPP
#define NBL_RUNNER_HPP

#include <cstdint>
#include <optional>

#include "nbl/scenario.hpp"

namespace nbl {

struct RunOptions {
  std::optional<std::string> output_dir;  ///< overrides [output] directory
  std::optional<int> snapshots;           ///< overrides [solver] snapshots
  bool quiet = false;
};

struct RunOutcome {
  RunRecord record;
  std::string output_dir;
};

/// Executes a scenario and writes the time-series table, per-snapshot grid
/// dumps and contour rasters (per the output format list), plus the resolved
/// configuration echo.
RunOutcome run_command(const ScenarioConfig& cfg, const RunOptions& opt);

struct PerturbationSpec {
  int component = 0;
  std::string shape = "bump";
  Vec2 center{0.0, 0.0};
  double radius = 1.0;
  std::vector<double> deltas;
};

/// Parses "component=0,shape=bump,center_x=4,center_y=0.3,radius=1,
/// deltas=1e-2:1e-3:1e-4".
PerturbationSpec parse_perturbation(const std::string& spec);

struct CompareOutcome {
  std::vector<double> deltas;
  std::vector<double> times;
  /// ratios[s][d]: L1 distance at snapshot s divided by deltas[d]
  std::vector<std::vector<double>> ratios;
  std::string output_dir;
};

/// Runs the base scenario plus one perturbed run per delta (same grid and a
/// shared fixed time step so the snapshot schedules align) and tabulates the
/// L1 ratios.
CompareOutcome compare_command(const ScenarioConfig& cfg, const PerturbationSpec& pert,
                               const RunOptions& opt);

struct OracleOutcome {
  std::vector<int> sizes;
  std::vector<double> max_deviation;       ///< unit-mass kernel path
  std::vector<double> max_deviation_grad;  ///< gradient kernel path
  double tolerance = 1e-10;
  bool pass = true;
};

/// Fast-vs-direct convolution equivalence on seeded random fields.
OracleOutcome oracle_command(const std::vector<int>& sizes, std::uint64_t seed);

}  // namespace nbl

#endif
