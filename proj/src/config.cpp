#include "nbl/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace nbl {

const char* to_string(scenario_kind k) {
  switch (k) {
    case scenario_kind::laser: return "laser";
    case scenario_kind::conveyor: return "conveyor";
    case scenario_kind::blowup_homogeneous: return "blowup_homogeneous";
    case scenario_kind::blowup_psi: return "blowup_psi";
    case scenario_kind::custom: return "custom";
  }
  return "?";
}

scenario_kind scenario_kind_from_string(const std::string& s) {
  if (s == "laser") return scenario_kind::laser;
  if (s == "conveyor") return scenario_kind::conveyor;
  if (s == "blowup_homogeneous") return scenario_kind::blowup_homogeneous;
  if (s == "blowup_psi") return scenario_kind::blowup_psi;
  if (s == "custom") return scenario_kind::custom;
  throw config_error("scenario.kind: unknown kind '" + s +
                     "' (expected laser | conveyor | blowup_homogeneous | blowup_psi | custom)");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Entry {
  std::string value;
  int line = 0;
  bool consumed = false;
};

/// Parsed key-value tree with consumption tracking for unknown-key errors.
class Tree {
 public:
  Tree(const std::string& text, const std::string& source) : source_(source) {
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = trim(line);
      if (s.empty() || s[0] == '#') continue;
      if (s.front() == '[') {
        if (s.back() != ']')
          fail(lineno, "malformed section header '" + s + "'");
        section = trim(s.substr(1, s.size() - 2));
        if (section.empty()) fail(lineno, "empty section name");
        continue;
      }
      std::size_t eq = s.find('=');
      if (eq == std::string::npos)
        fail(lineno, "expected 'key = value', got '" + s + "'");
      std::string key = trim(s.substr(0, eq));
      std::string value = trim(s.substr(eq + 1));
      if (key.empty()) fail(lineno, "empty key");
      if (section.empty()) fail(lineno, "key '" + key + "' outside any [section]");
      std::string path = section + "." + key;
      if (entries_.count(path))
        fail(lineno, "duplicate key '" + path + "'");
      entries_[path] = Entry{value, lineno, false};
    }
  }

  bool has(const std::string& path) const { return entries_.count(path) != 0; }

  std::string get_string(const std::string& path, const std::string& dflt) {
    auto it = entries_.find(path);
    if (it == entries_.end()) return dflt;
    it->second.consumed = true;
    return it->second.value;
  }

  double get_double(const std::string& path, double dflt) {
    auto it = entries_.find(path);
    if (it == entries_.end()) return dflt;
    it->second.consumed = true;
    const std::string& v = it->second.value;
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || !std::isfinite(x))
      fail(it->second.line, path + ": expected a finite number, got '" + v + "'");
    return x;
  }

  int get_int(const std::string& path, int dflt) {
    auto it = entries_.find(path);
    if (it == entries_.end()) return dflt;
    double x = get_double(path, 0.0);
    int n = int(std::lround(x));
    if (double(n) != x) fail(it->second.line, path + ": expected an integer");
    return n;
  }

  bool get_bool(const std::string& path, bool dflt) {
    auto it = entries_.find(path);
    if (it == entries_.end()) return dflt;
    it->second.consumed = true;
    const std::string& v = it->second.value;
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    fail(it->second.line, path + ": expected true/false");
    return dflt;
  }

  void reject_unconsumed() const {
    for (const auto& [path, e] : entries_)
      if (!e.consumed)
        fail(e.line, "unknown key '" + path + "' for this scenario");
  }

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw config_error(source_ + ":" + std::to_string(line) + ": " + msg);
  }

 private:
  std::string source_;
  std::map<std::string, Entry> entries_;
};

void apply_kind_defaults(ScenarioConfig& c) {
  switch (c.kind) {
    case scenario_kind::laser:
      c.grid = make_grid(0.0, 40.0, -2.0, 2.0, 8000, 800);
      c.solver.boundary = boundary_mode::far_field;
      c.solver.t_end = 1.0;
      c.solver.snapshots = 20;
      c.output.contour_component = 1;
      c.output.contour_min = 0.0;
      c.output.contour_max = c.laser.plate_thickness;
      break;
    case scenario_kind::conveyor:
      c.grid = make_grid(0.0, c.conveyor.length, -c.conveyor.half_width,
                         c.conveyor.half_width, 400, 80);
      c.solver.boundary = boundary_mode::far_field;
      c.solver.t_end = 1.0;
      c.solver.snapshots = 20;
      c.output.contour_component = 0;
      c.output.contour_min = 0.0;
      c.output.contour_max = c.conveyor.rho_max;
      break;
    case scenario_kind::blowup_homogeneous:
      c.blowup.use_psi = false;
      c.blowup.kernel = BumpProfile{1.0, 0.3, 3};
      c.grid = make_grid(0.0, 1.0, 0.0, 1.0, 16, 16);
      c.solver.boundary = boundary_mode::periodic;
      c.solver.fixed_dt = 1e-3;
      c.solver.t_end = 1.05;
      c.solver.snapshots = 21;
      c.output.contour_component = 0;
      c.output.contour_min = 0.0;
      c.output.contour_max = 10.0;
      break;
    case scenario_kind::blowup_psi:
      c.blowup.use_psi = true;
      c.blowup.kernel = BumpProfile{1.0, 1.0, 3};
      c.grid = make_grid(-3.0, 3.0, -0.5, 0.5, 6000, 1);
      c.solver.boundary = boundary_mode::far_field;
      c.solver.fixed_dt = 1e-3;
      c.solver.t_end = 1.05;
      c.solver.snapshots = 21;
      c.output.contour_component = 0;
      c.output.contour_min = 0.0;
      c.output.contour_max = 10.0;
      break;
    case scenario_kind::custom:
      c.grid = make_grid(0.0, 1.0, 0.0, 1.0, 128, 128);
      c.solver.boundary = boundary_mode::periodic;
      c.solver.t_end = 1.0;
      c.solver.snapshots = 10;
      c.output.contour_component = 0;
      c.output.contour_min = 0.0;
      c.output.contour_max = 1.0;
      break;
  }
}

void read_grid(Tree& t, ScenarioConfig& c) {
  double x_min = t.get_double("grid.x_min", c.grid.x_min);
  double x_max = t.get_double("grid.x_max", c.grid.x_max);
  double y_min = t.get_double("grid.y_min", c.grid.y_min);
  double y_max = t.get_double("grid.y_max", c.grid.y_max);
  int nx = t.get_int("grid.nx", c.grid.nx);
  int ny = t.get_int("grid.ny", c.grid.ny);
  c.grid = make_grid(x_min, x_max, y_min, y_max, nx, ny);
  std::string b = t.get_string("grid.boundary", c.solver.boundary == boundary_mode::periodic
                                                    ? "periodic"
                                                    : "far_field");
  if (b == "periodic")
    c.solver.boundary = boundary_mode::periodic;
  else if (b == "far_field")
    c.solver.boundary = boundary_mode::far_field;
  else
    throw config_error("grid.boundary: expected far_field or periodic, got '" + b + "'");
}

void read_solver(Tree& t, ScenarioConfig& c) {
  c.solver.cfl = t.get_double("solver.cfl", c.solver.cfl);
  c.solver.t_end = t.get_double("solver.t_end", c.solver.t_end);
  if (t.has("solver.dt_max")) c.solver.dt_max = t.get_double("solver.dt_max", 0.0);
  if (t.has("solver.fixed_dt"))
    c.solver.fixed_dt = t.get_double("solver.fixed_dt", 0.0);
  c.solver.snapshots = t.get_int("solver.snapshots", c.solver.snapshots);
  c.solver.blowup_ceiling = t.get_double("solver.blowup_ceiling", c.solver.blowup_ceiling);
  if (!(c.solver.t_end > 0.0))
    throw config_error("solver.t_end: must be positive");
  c.solver.validate();
}

void read_output(Tree& t, ScenarioConfig& c) {
  c.output.directory = t.get_string("output.directory", c.output.directory);
  std::string formats = t.get_string("output.formats", "");
  if (!formats.empty()) {
    c.output.write_csv = c.output.write_dump = c.output.write_pgm = false;
    std::istringstream in(formats);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      tok = trim(tok);
      if (tok == "csv")
        c.output.write_csv = true;
      else if (tok == "dump")
        c.output.write_dump = true;
      else if (tok == "pgm")
        c.output.write_pgm = true;
      else
        throw config_error("output.formats: unknown format '" + tok +
                           "' (expected csv, dump, pgm)");
    }
  }
  c.output.contour_component =
      t.get_int("output.contour_component", c.output.contour_component);
  c.output.contour_min = t.get_double("output.contour_min", c.output.contour_min);
  c.output.contour_max = t.get_double("output.contour_max", c.output.contour_max);
  if (!(c.output.contour_min < c.output.contour_max))
    throw config_error("output.contour_min/contour_max: require min < max");
}

void read_laser(Tree& t, ScenarioConfig& c) {
  LaserParams& p = c.laser;
  p.tau_g = t.get_double("laser.tau_g", p.tau_g);
  p.wind.amplitude = t.get_double("laser.wind_amplitude", p.wind.amplitude);
  p.wind.radius = t.get_double("laser.wind_radius", p.wind.radius);
  p.wind.exponent = t.get_int("laser.wind_exponent", p.wind.exponent);
  p.intensity.amplitude = t.get_double("laser.intensity_amplitude", p.intensity.amplitude);
  p.intensity.radius = t.get_double("laser.intensity_radius", p.intensity.radius);
  p.intensity.exponent = t.get_int("laser.intensity_exponent", p.intensity.exponent);
  p.kernel.radius = t.get_double("laser.kernel_radius", p.kernel.radius);
  p.kernel.exponent = t.get_int("laser.kernel_exponent", p.kernel.exponent);
  p.plate_thickness = t.get_double("laser.plate_thickness", p.plate_thickness);
  p.hold_point.x = t.get_double("laser.hold_x", p.hold_point.x);
  p.hold_point.y = t.get_double("laser.hold_y", p.hold_point.y);
  p.hold_time = t.get_double("laser.hold_time", p.hold_time);
  p.cut_speed = t.get_double("laser.cut_speed", p.cut_speed);
  p.r_cut = t.get_double("laser.r_cut", p.r_cut);
  p.R_cut = t.get_double("laser.R_cut", p.R_cut);
  p.exclude_radius = t.get_double("laser.exclude_radius", p.exclude_radius);
  if (t.has("output.contour_max") == false &&
      c.output.contour_component == 1)
    c.output.contour_max = p.plate_thickness;
  p.resolve_cutoff(c.grid);
  p.validate();
}

void read_conveyor(Tree& t, ScenarioConfig& c) {
  ConveyorParams& p = c.conveyor;
  bool grid_given = t.has("grid.nx") || t.has("grid.x_max");
  p.half_width = t.get_double("conveyor.half_width", p.half_width);
  p.length = t.get_double("conveyor.length", p.length);
  p.delta = t.get_double("conveyor.delta", p.delta);
  p.eps = t.get_double("conveyor.eps", p.eps);
  p.eps_hat = t.get_double("conveyor.eps_hat", p.eps_hat);
  p.mu = t.get_double("conveyor.mu", p.mu);
  p.rho_max = t.get_double("conveyor.rho_max", p.rho_max);
  p.belt_speed = t.get_double("conveyor.belt_speed", p.belt_speed);
  p.region_width = t.get_double("conveyor.region_width", p.region_width);
  p.q_in = t.get_double("conveyor.q_in", p.q_in);
  p.q_out = t.get_double("conveyor.q_out", p.q_out);
  p.kappa = t.get_double("conveyor.kappa", p.kappa);
  p.kernel.radius = t.get_double("conveyor.kernel_radius", p.kernel.radius);
  p.kernel.exponent = t.get_int("conveyor.kernel_exponent", p.kernel.exponent);
  p.validate();
  // The default window is the belt itself; an explicit [grid] wins.
  if (!grid_given)
    c.grid = make_grid(0.0, p.length, -p.half_width, p.half_width, c.grid.nx, c.grid.ny);
}

void read_blowup(Tree& t, ScenarioConfig& c) {
  BlowupParams& p = c.blowup;
  p.kernel.radius = t.get_double("blowup.kernel_radius", p.kernel.radius);
  p.kernel.exponent = t.get_int("blowup.kernel_exponent", p.kernel.exponent);
  p.initial_value = t.get_double("blowup.initial_value", p.initial_value);
  p.validate();
}

void read_custom(Tree& t, ScenarioConfig& c) {
  AdvectionParams& p = c.advection;
  p.velocity_x = t.get_double("custom.velocity_x", p.velocity_x);
  p.velocity_y = t.get_double("custom.velocity_y", p.velocity_y);
  p.bump_center.x = t.get_double("custom.bump_center_x", p.bump_center.x);
  p.bump_center.y = t.get_double("custom.bump_center_y", p.bump_center.y);
  p.bump_radius = t.get_double("custom.bump_radius", p.bump_radius);
  p.bump_amplitude = t.get_double("custom.bump_amplitude", p.bump_amplitude);
  if (!(p.bump_radius > 0.0)) throw config_error("custom.bump_radius: must be positive");
}

}  // namespace

ScenarioConfig parse_config(const std::string& text, const std::string& source_name) {
  Tree t(text, source_name);
  ScenarioConfig c;
  std::string kind = t.get_string("scenario.kind", "");
  if (kind.empty())
    throw config_error(source_name + ": missing required key scenario.kind");
  c.kind = scenario_kind_from_string(kind);
  apply_kind_defaults(c);
  read_grid(t, c);
  switch (c.kind) {
    case scenario_kind::laser: read_laser(t, c); break;
    case scenario_kind::conveyor: read_conveyor(t, c); break;
    case scenario_kind::blowup_homogeneous:
    case scenario_kind::blowup_psi: read_blowup(t, c); break;
    case scenario_kind::custom: read_custom(t, c); break;
  }
  read_solver(t, c);
  read_output(t, c);
  t.reject_unconsumed();
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

namespace {

std::string num(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

}  // namespace

std::string render_effective_config(const ScenarioConfig& c) {
  std::ostringstream o;
  o << "# effective configuration (defaults resolved)\n";
  o << "[scenario]\nkind = " << to_string(c.kind) << "\n\n";
  o << "[grid]\n";
  o << "x_min = " << num(c.grid.x_min) << "\nx_max = " << num(c.grid.x_max) << "\n";
  o << "y_min = " << num(c.grid.y_min) << "\ny_max = " << num(c.grid.y_max) << "\n";
  o << "nx = " << c.grid.nx << "\nny = " << c.grid.ny << "\n";
  o << "boundary = "
    << (c.solver.boundary == boundary_mode::periodic ? "periodic" : "far_field") << "\n\n";
  switch (c.kind) {
    case scenario_kind::laser: {
      const LaserParams& p = c.laser;
      o << "[laser]\n";
      o << "tau_g = " << num(p.tau_g) << "\n";
      o << "wind_amplitude = " << num(p.wind.amplitude) << "\n";
      o << "wind_radius = " << num(p.wind.radius) << "\n";
      o << "wind_exponent = " << p.wind.exponent << "\n";
      o << "intensity_amplitude = " << num(p.intensity.amplitude) << "\n";
      o << "intensity_radius = " << num(p.intensity.radius) << "\n";
      o << "intensity_exponent = " << p.intensity.exponent << "\n";
      o << "kernel_radius = " << num(p.kernel.radius) << "\n";
      o << "kernel_exponent = " << p.kernel.exponent << "\n";
      o << "plate_thickness = " << num(p.plate_thickness) << "\n";
      o << "hold_x = " << num(p.hold_point.x) << "\nhold_y = " << num(p.hold_point.y) << "\n";
      o << "hold_time = " << num(p.hold_time) << "\n";
      o << "cut_speed = " << num(p.cut_speed) << "\n";
      o << "r_cut = " << num(p.r_cut) << "\nR_cut = " << num(p.R_cut) << "\n";
      o << "exclude_radius = " << num(p.exclude_radius) << "\n\n";
      break;
    }
    case scenario_kind::conveyor: {
      const ConveyorParams& p = c.conveyor;
      o << "[conveyor]\n";
      o << "half_width = " << num(p.half_width) << "\nlength = " << num(p.length) << "\n";
      o << "delta = " << num(p.delta) << "\n";
      o << "eps = " << num(p.eps) << "\neps_hat = " << num(p.eps_hat) << "\n";
      o << "mu = " << num(p.mu) << "\nrho_max = " << num(p.rho_max) << "\n";
      o << "belt_speed = " << num(p.belt_speed) << "\n";
      o << "region_width = " << num(p.region_width) << "\n";
      o << "q_in = " << num(p.q_in) << "\nq_out = " << num(p.q_out) << "\n";
      o << "kappa = " << num(p.kappa) << "\n";
      o << "kernel_radius = " << num(p.kernel.radius) << "\n";
      o << "kernel_exponent = " << p.kernel.exponent << "\n\n";
      break;
    }
    case scenario_kind::blowup_homogeneous:
    case scenario_kind::blowup_psi: {
      const BlowupParams& p = c.blowup;
      o << "[blowup]\n";
      o << "kernel_radius = " << num(p.kernel.radius) << "\n";
      o << "kernel_exponent = " << p.kernel.exponent << "\n";
      o << "initial_value = " << num(p.initial_value) << "\n\n";
      break;
    }
    case scenario_kind::custom: {
      const AdvectionParams& p = c.advection;
      o << "[custom]\n";
      o << "velocity_x = " << num(p.velocity_x) << "\nvelocity_y = " << num(p.velocity_y) << "\n";
      o << "bump_center_x = " << num(p.bump_center.x) << "\n";
      o << "bump_center_y = " << num(p.bump_center.y) << "\n";
      o << "bump_radius = " << num(p.bump_radius) << "\n";
      o << "bump_amplitude = " << num(p.bump_amplitude) << "\n\n";
      break;
    }
  }
  o << "[solver]\n";
  o << "cfl = " << num(c.solver.cfl) << "\n";
  o << "t_end = " << num(c.solver.t_end) << "\n";
  if (c.solver.dt_max) o << "dt_max = " << num(*c.solver.dt_max) << "\n";
  if (c.solver.fixed_dt) o << "fixed_dt = " << num(*c.solver.fixed_dt) << "\n";
  o << "snapshots = " << c.solver.snapshots << "\n";
  o << "blowup_ceiling = " << num(c.solver.blowup_ceiling) << "\n\n";
  o << "[output]\n";
  o << "directory = " << c.output.directory << "\n";
  std::string formats;
  if (c.output.write_csv) formats += "csv";
  if (c.output.write_dump) formats += formats.empty() ? "dump" : ",dump";
  if (c.output.write_pgm) formats += formats.empty() ? "pgm" : ",pgm";
  o << "formats = " << formats << "\n";
  o << "contour_component = " << c.output.contour_component << "\n";
  o << "contour_min = " << num(c.output.contour_min) << "\n";
  o << "contour_max = " << num(c.output.contour_max) << "\n";
  return o.str();
}

}  // namespace nbl
