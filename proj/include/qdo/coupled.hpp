#pragma once

#include "qdo/gaussian.hpp"

namespace qdo::coupled {

/// Two oscillators of equal mass with bilinear coupling lambda*x1*x2.
/// Valid while m^2 w1^2 w2^2 - lambda^2 > 0 (the coupled ground state
/// exists); stronger coupling is rejected.
struct CoupledParams {
  double m = 1.0;
  double omega1 = 1.0;
  double omega2 = 1.0;
  double lambda = 0.0;
};

/// Normal-mode mixing parameters.  cos/sin of 2*vartheta are carried
/// explicitly (computed from the defining right triangle, not from trig of
/// the angle) so that lambda = 0 gives sin_2vartheta = 0 exactly.
struct Mixing {
  double eta;
  double vartheta;
  double cos_2vartheta;
  double sin_2vartheta;
};

/// e^eta = [m(w1^2 + w2^2) + sqrt(m^2 (w1^2 - w2^2)^2 + 4 lambda^2)]
///         / (2 sqrt(m^2 w1^2 w2^2 - lambda^2)),
/// tan(2 vartheta) = 2 lambda / (m (w2^2 - w1^2)), quadrant fixed by atan2.
Mixing mixing(const CoupledParams& p);

/// Reduced single-oscillator kernel parameters (dimensionless form):
///   width_d = cosh(eta) - sinh(eta) cos(2 vartheta)
///   gamma_delta_mix = cosh^2(eta) - sinh^2(eta) cos^2(2 vartheta)
///                   = 1 + sinh^2(eta) sin^2(2 vartheta)  >= 1.
struct MixedReduced {
  double width_d;
  double gamma_delta_mix;
  double eta;
  double vartheta;
};

MixedReduced coupled_reduced(const CoupledParams& p);

/// The kernel rho(x', x) = (1/(pi D))^{1/2} exp[-(xc^2 + G xd^2)/D] as a
/// Gaussian1D (gamma_mu = 0, so the classical-correlation measure is
/// infinite for every valid parameter set).
Gaussian1D to_gaussian(const MixedReduced& r);

/// delta_qd = 1 / (2 sqrt(gamma_delta_mix)); <= 1/2 with equality iff the
/// mode mixing vanishes (lambda = 0 or eta = 0).
double delta_qd_from_mixing(const Mixing& mix);
double coupled_delta_qd(const CoupledParams& p);

}  // namespace qdo::coupled
