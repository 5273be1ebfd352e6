#include "nbl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nbl {

std::string format_g17(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

void write_field_dump(const std::string& path, const FieldDump& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  const Grid2D& g = d.grid;
  out << "# nbl field dump\n";
  out << "nx " << g.nx << "\nny " << g.ny << "\n";
  out << "x_min " << format_g17(g.x_min) << "\nx_max " << format_g17(g.x_max) << "\n";
  out << "y_min " << format_g17(g.y_min) << "\ny_max " << format_g17(g.y_max) << "\n";
  out << "t " << format_g17(d.t) << "\n";
  out << "components";
  for (const auto& n : d.component_names) out << ' ' << n;
  out << "\nfar_field";
  for (int c = 0; c < d.field.n_components(); ++c)
    out << ' ' << format_g17(d.field.far_field(c));
  out << "\n";
  for (int c = 0; c < d.field.n_components(); ++c) {
    out << "component " << d.component_names.at(c) << "\n";
    auto u = d.field.component(c);
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        if (i) out << ' ';
        out << format_g17(u[g.index(i, j)]);
      }
      out << '\n';
    }
  }
  if (!out) throw io_error("write failed: " + path);
}

namespace {

std::string expect_token(std::istream& in, const std::string& what) {
  std::string tok;
  if (!(in >> tok)) throw io_error("field dump: truncated while reading " + what);
  return tok;
}

double expect_number(std::istream& in, const std::string& what) {
  std::string tok = expect_token(in, what);
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    throw io_error("field dump: bad number for " + what + ": '" + tok + "'");
  return v;
}

}  // namespace

FieldDump read_field_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open for reading: " + path);
  std::string line;
  std::getline(in, line);
  if (line != "# nbl field dump") throw io_error("not a field dump: " + path);
  auto expect_key = [&](const std::string& key) {
    std::string tok = expect_token(in, key);
    if (tok != key) throw io_error("field dump: expected '" + key + "', got '" + tok + "'");
  };
  FieldDump d;
  expect_key("nx");
  int nx = int(expect_number(in, "nx"));
  expect_key("ny");
  int ny = int(expect_number(in, "ny"));
  expect_key("x_min");
  double x_min = expect_number(in, "x_min");
  expect_key("x_max");
  double x_max = expect_number(in, "x_max");
  expect_key("y_min");
  double y_min = expect_number(in, "y_min");
  expect_key("y_max");
  double y_max = expect_number(in, "y_max");
  d.grid = make_grid(x_min, x_max, y_min, y_max, nx, ny);
  expect_key("t");
  d.t = expect_number(in, "t");
  expect_key("components");
  {
    std::string rest;
    std::getline(in, rest);
    std::istringstream names(rest);
    std::string n;
    while (names >> n) d.component_names.push_back(n);
  }
  if (d.component_names.empty()) throw io_error("field dump: no components listed");
  expect_key("far_field");
  std::vector<double> far;
  for (std::size_t c = 0; c < d.component_names.size(); ++c)
    far.push_back(expect_number(in, "far_field"));
  d.field = Field(int(d.component_names.size()), d.grid, far);
  for (std::size_t c = 0; c < d.component_names.size(); ++c) {
    expect_key("component");
    std::string name = expect_token(in, "component name");
    if (name != d.component_names[c])
      throw io_error("field dump: component order mismatch at '" + name + "'");
    auto u = d.field.component(int(c));
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        u[d.grid.index(i, j)] = expect_number(in, "cell value");
  }
  return d;
}

void write_pgm(const std::string& path, std::span<const double> values,
               const Grid2D& grid, double lo, double hi) {
  if (!(lo < hi)) throw io_error("write_pgm: require lo < hi");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << "P5\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  std::vector<unsigned char> row(grid.nx);
  const double scale = 254.0 / (hi - lo);
  for (int j = grid.ny - 1; j >= 0; --j) {
    for (int i = 0; i < grid.nx; ++i) {
      double v = values[grid.index(i, j)];
      if (v < lo) {
        row[i] = 0;
      } else {
        long b = 1 + long(std::lround((v - lo) * scale));
        row[i] = (unsigned char)std::min(255L, std::max(1L, b));
      }
    }
    out.write(reinterpret_cast<const char*>(row.data()), row.size());
  }
  if (!out) throw io_error("write failed: " + path);
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (k) out << ',';
    out << columns[k];
  }
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out << ',';
      out << format_g17(r[k]);
    }
    out << '\n';
  }
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace nbl
