#ifndef NBL_CONFIG_HPP
#define NBL_CONFIG_HPP

#include <string>

#include "nbl/models/blowup.hpp"
#include "nbl/models/conveyor.hpp"
#include "nbl/models/laser.hpp"
#include "nbl/solver.hpp"

namespace nbl {

enum class scenario_kind { laser, conveyor, blowup_homogeneous, blowup_psi, custom };

const char* to_string(scenario_kind k);
scenario_kind scenario_kind_from_string(const std::string& s);

struct AdvectionParams {
  double velocity_x = 1.0;
  double velocity_y = 0.0;
  Vec2 bump_center{0.5, 0.5};
  double bump_radius = 0.25;
  double bump_amplitude = 1.0;
};

struct OutputConfig {
  std::string directory = "out";
  bool write_csv = true;
  bool write_dump = true;
  bool write_pgm = true;
  int contour_component = 0;
  double contour_min = 0.0;
  double contour_max = 1.0;
};

/// A fully resolved scenario description: kind, grid, model parameters,
/// solver settings and output options, with every default filled in.
struct ScenarioConfig {
  scenario_kind kind = scenario_kind::laser;
  Grid2D grid;
  LaserParams laser;
  ConveyorParams conveyor;
  BlowupParams blowup;
  AdvectionParams advection;
  SolverConfig solver;
  OutputConfig output;
};

/// Parses the sectioned key-value format documented in the README. Unknown
/// sections or keys, duplicate keys, malformed values and constraint
/// violations are rejected with the key path and line number.
ScenarioConfig parse_config(const std::string& text, const std::string& source_name);

ScenarioConfig load_config(const std::string& path);

/// Serializes the resolved configuration; parsing the result reproduces it.
std::string render_effective_config(const ScenarioConfig& cfg);

}  // namespace nbl

#endif
