#ifndef NBL_SCENARIO_HPP
#define NBL_SCENARIO_HPP

#include <memory>

#include "nbl/config.hpp"
#include "nbl/diagnostics.hpp"

namespace nbl {

/// A ready-to-run scenario: model, grid, initial datum and the scenario's
/// diagnostic metrics.
struct Scenario {
  scenario_kind kind;
  Grid2D grid;
  std::unique_ptr<Model> model;
  Field initial;
  std::vector<Metric> metrics;
  SolverConfig solver;
  OutputConfig output;
};

Scenario build_scenario(const ScenarioConfig& cfg);

}  // namespace nbl

#endif
