#pragma once

#include "qdo/ck.hpp"

namespace qdo::amplified {

/// The amplified oscillator is the gamma -> -gamma image of the damped one.
/// Every operation here delegates to the ck module on mirrored parameters,
/// so the mirror symmetry is a structural property rather than a duplicated
/// code path.
struct Measures {
  double delta_qd;  // always 1/2: no decoherence for a single mode
  double delta_cc;  // (m Omega)^2 e^{-gamma t/m} / (hbar |gamma|); inf at gamma = 0
};

OscillatorParams mirrored(const OscillatorParams& p);

/// v(t) = e^{+gamma t/2m} e^{-i Omega t} / sqrt(2 hbar m Omega); the
/// exponentially growing solution of v'' - (gamma/m) v' + omega^2 v = 0.
ModeFunction v_mode(const OscillatorParams& p, double t);

/// hbar m e^{-gamma t/m} (v'* v - v' v*); equals i.
Complex wronskian(const OscillatorParams& p, const ModeFunction& mf);

double eom_residual(const OscillatorParams& p, double t);

Complex wavefunction(const OscillatorParams& p, int n, double y, double t);

/// <y^2> grows as e^{+gamma t/m}, <p^2> shrinks as e^{-gamma t/m}.
Dispersions dispersions(const OscillatorParams& p, double t);

Gaussian1D density(const OscillatorParams& p, double t);

Measures measures(const OscillatorParams& p, double t);

}  // namespace qdo::amplified
