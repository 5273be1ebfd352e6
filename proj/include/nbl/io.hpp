#ifndef NBL_IO_HPP
#define NBL_IO_HPP

#include <string>
#include <vector>

#include "nbl/grid.hpp"

namespace nbl {

/// Plain-text field dump: header (grid, time, component names, far-field
/// values) followed by one ASCII row per grid row with 17 significant
/// digits, which is lossless for 64-bit floats and diff-able.
struct FieldDump {
  Grid2D grid;
  double t = 0.0;
  std::vector<std::string> component_names;
  Field field;
};

void write_field_dump(const std::string& path, const FieldDump& dump);
FieldDump read_field_dump(const std::string& path);

/// Binary P5 graymap of one component: values below lo map to byte 0 (the
/// "expelled" convention), the range [lo, hi] maps linearly onto 1..255.
/// Rows are written top (largest y) first.
void write_pgm(const std::string& path, std::span<const double> values,
               const Grid2D& grid, double lo, double hi);

/// Comma-separated table with a header row; numbers at 17 significant digits.
void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

std::string format_g17(double v);

}  // namespace nbl

#endif
