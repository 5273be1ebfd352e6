#include "nbl/models/blowup.hpp"

#include <cmath>

namespace nbl {

void BlowupParams::validate() const { kernel.validate("blowup.kernel"); }

double blowup_psi(double r) {
  r = std::abs(r);
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  double t = 1.0 - ipow(r - 1.0, 3);
  return ipow(t, 4);
}

double blowup_source(double, Vec2 x, double u, double conv_u, bool use_psi) {
  double psi = use_psi ? blowup_psi(x.norm()) : 1.0;
  return conv_u * u * psi;
}

BlowupModel::BlowupModel(BlowupParams params) : params_(params) {
  params_.validate();
  // The homogeneous variant runs on a periodic grid; its far-field entry is
  // only used by diagnostics and matches the constant datum.
  far_ = {params_.use_psi ? 0.0 : params_.initial_value};
}

}  // namespace nbl
