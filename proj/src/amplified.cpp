#include "qdo/amplified.hpp"

#include <cmath>
#include <limits>

namespace qdo::amplified {

OscillatorParams mirrored(const OscillatorParams& p) {
  OscillatorParams q = p;
  q.gamma = -p.gamma;
  return q;
}

ModeFunction v_mode(const OscillatorParams& p, double t) {
  return ck::mode_function(mirrored(p), t);
}

Complex wronskian(const OscillatorParams& p, const ModeFunction& mf) {
  return ck::wronskian(mirrored(p), mf);
}

double eom_residual(const OscillatorParams& p, double t) {
  return ck::eom_residual(mirrored(p), t);
}

Complex wavefunction(const OscillatorParams& p, int n, double y, double t) {
  return ck::wavefunction(mirrored(p), n, y, t);
}

Dispersions dispersions(const OscillatorParams& p, double t) {
  return ck::dispersions(mirrored(p), t);
}

Gaussian1D density(const OscillatorParams& p, double t) {
  return ck::ck_density(mirrored(p), t);
}

Measures measures(const OscillatorParams& p, double t) {
  const Gaussian1D g = density(p, t);
  return {delta_qd(g), delta_cc(g)};
}

}  // namespace qdo::amplified
