#pragma once

#include <vector>

#include "qdo/ck.hpp"
#include "qdo/gaussian.hpp"

namespace qdo::bft {

/// The six complex coefficients of the two-mode Gaussian ansatz at time t.
/// The physical family satisfies a = b*, a1 = b1* (enforced by
/// particular_solution, only checked for integrated trajectories) and
/// a1, b1, c real (Hermitian kernel).
struct Coefficients {
  Complex a{0.0, 0.0};
  Complex a1{0.0, 0.0};
  Complex b{0.0, 0.0};
  Complex b1{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{0.0, 0.0};
  double t = 0.0;
};

/// Stationary-family parameters: d_abs = |D| >= 0 and the phase theta,
/// restricted to the open interval (pi/2, 3pi/2) so that A + A* > 0
/// (normalizability).  The oscillator parameters supply m Omega / hbar and
/// the damping rate for the time factors.
struct ParticularSpec {
  double d_abs = 0.0;
  double theta = 3.14159265358979323846;
  OscillatorParams params;
};

/// Time derivatives of the six coefficients:
///   A' = i (hbar/m) (2AC - A1 D*)
///   B' = i (hbar/m) (2BC - B1 D)
///   A1' = i (2 hbar/m) (AD - A* D*)
///   B1' = i (2 hbar/m) (B D* - B* D)
///   C' = i (hbar/m) (4AB + C^2 - A1 B1 - D* D) - i m Omega^2 / hbar
///   D' = i (2 hbar/m) (A1 B - A* B1)
Coefficients ode_rhs(const Coefficients& cf, const OscillatorParams& p);

/// Fixed-step RK4 trajectory of the coefficient system, including the state
/// at t_end.  step_halving_error is the max coefficient deviation at t_end
/// against a half-step rerun.  Throws BlowUpError (carrying the last valid
/// time) when any coefficient modulus exceeds 1e12.
struct Trajectory {
  std::vector<Coefficients> states;
  double dt = 0.0;
  double step_halving_error = 0.0;
};

Trajectory integrate(const Coefficients& cf0, const OscillatorParams& p,
                     double t_end, double dt);

/// Default integration step 1e-3 * m / max(hbar |A|, m Omega).
double default_step(const Coefficients& cf0, const OscillatorParams& p);

/// The stationary solution
///   A = B* = sqrt((m Omega/2 hbar)^2 + |D|^2/4) e^{i(pi - theta)},
///   D = |D| e^{i theta},  A1 = B1 = C = 0.
/// An exact fixed point of ode_rhs.  Throws NormalizabilityError when theta
/// lies outside the open interval (pi/2, 3pi/2).
Coefficients particular_solution(const ParticularSpec& spec);

/// Two-mode kernel for a coefficient set at time t, with
/// damping_exponent = gamma t / m and the norm recomputed so trace2d = 1.
/// For the stationary family the norm equals
/// (1/pi) sqrt((A+A*)^2 - (D+D*)^2/4).
Gaussian2D density(const Coefficients& cf, const OscillatorParams& p,
                   double t);

/// Reduced kernel of the damped (x) subsystem; coefficients scale with
/// e^{+gamma t/m}.
Gaussian1D reduced_damped(const ParticularSpec& spec, double t);

/// Reduced kernel of the amplified (y) subsystem; coefficients scale with
/// e^{-gamma t/m}.  Equals reduced_damped of the mirrored spec
/// (gamma -> -gamma, D -> D*).
Gaussian1D reduced_amplified(const ParticularSpec& spec, double t);

/// Max |Im| over the a1, b1, c coefficients (zero for Hermitian kernels).
double hermitian_defect(const Coefficients& cf);

/// The closed-form measures printed for the stationary family:
///   delta_qd = (1/2) sqrt(k^2 / (k^2 cos^2 theta + |D|^2)),  k = m Omega/hbar
///   delta_cc = (1/2) |cot theta| (k^2 cos^2 theta + |D|^2).
/// These disagree with the definition-based values from reduced_damped (the
/// delta_qd numerator lacks a cos^2 theta factor and delta_cc lacks the
/// e^{gamma t/m} growth); both are reported, neither silently corrected.
/// delta_cc diverges where sin theta = 0 and is returned as +infinity there.
struct ClosedFormMeasures {
  double delta_qd;
  double delta_cc;
};

ClosedFormMeasures closed_form_measures(const ParticularSpec& spec);

/// Classicality verdicts at t = 0.  decohered: definition-based
/// delta_qd < 1/2 - 1e-9; correlated: definition-based delta_cc < 1;
/// classical: both.  The _closed fields apply the same thresholds to the
/// closed-form measures.
struct Classicality {
  bool decohered = false;
  bool correlated = false;
  bool classical = false;
  bool decohered_closed = false;
  bool correlated_closed = false;
  bool classical_closed = false;
  double delta_qd = 0.0;
  double delta_cc = 0.0;
  double delta_qd_closed = 0.0;
  double delta_cc_closed = 0.0;
};

Classicality classicality_check(const ParticularSpec& spec);

}  // namespace qdo::bft
