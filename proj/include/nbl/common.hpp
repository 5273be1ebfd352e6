#ifndef NBL_COMMON_HPP
#define NBL_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace nbl {

/// A point or vector in the plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

/// Invalid scenario or solver configuration. The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure while reading or writing artifacts. Maps to exit code 4.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// C2 quintic smoothstep on [0,1]; clamped outside.
inline double smoothstep01(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

/// Derivative of smoothstep01 (zero outside [0,1]).
inline double smoothstep01_deriv(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  return s * s * (30.0 + s * (-60.0 + 30.0 * s));
}

/// Integer power by repeated multiplication; exponents here are small.
inline double ipow(double base, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= base;
  return r;
}

/// Compensated (Kahan) accumulator for long reductions.
class kahan_sum {
 public:
  void add(double v) {
    double y = v - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace nbl

#endif
