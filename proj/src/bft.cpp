#include "qdo/bft.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qdo/errors.hpp"

namespace qdo::bft {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBlowUpLimit = 1e12;

Coefficients axpy(const Coefficients& x, double s, const Coefficients& y) {
  Coefficients r;
  r.a = x.a + s * y.a;
  r.a1 = x.a1 + s * y.a1;
  r.b = x.b + s * y.b;
  r.b1 = x.b1 + s * y.b1;
  r.c = x.c + s * y.c;
  r.d = x.d + s * y.d;
  r.t = x.t + s * y.t;
  return r;
}

double max_modulus(const Coefficients& cf) {
  double m = std::abs(cf.a);
  m = std::max(m, std::abs(cf.a1));
  m = std::max(m, std::abs(cf.b));
  m = std::max(m, std::abs(cf.b1));
  m = std::max(m, std::abs(cf.c));
  m = std::max(m, std::abs(cf.d));
  return m;
}

Coefficients rk4_step(const Coefficients& cf, const OscillatorParams& p,
                      double dt) {
  const Coefficients k1 = ode_rhs(cf, p);
  const Coefficients k2 = ode_rhs(axpy(cf, 0.5 * dt, k1), p);
  const Coefficients k3 = ode_rhs(axpy(cf, 0.5 * dt, k2), p);
  const Coefficients k4 = ode_rhs(axpy(cf, dt, k3), p);
  Coefficients next = axpy(cf, dt / 6.0, k1);
  next = axpy(next, dt / 3.0, k2);
  next = axpy(next, dt / 3.0, k3);
  next = axpy(next, dt / 6.0, k4);
  return next;
}

Coefficients propagate(Coefficients cf, const OscillatorParams& p,
                       double t_end, double dt,
                       std::vector<Coefficients>* record) {
  while (cf.t < t_end - 1e-15 * std::max(1.0, std::abs(t_end))) {
    const double step = std::min(dt, t_end - cf.t);
    if (!(step > 0.0)) break;
    cf = rk4_step(cf, p, step);
    if (max_modulus(cf) > kBlowUpLimit) {
      throw BlowUpError("coefficient ODE blow-up at t = " +
                            std::to_string(cf.t),
                        cf.t - step);
    }
    if (record != nullptr) record->push_back(cf);
  }
  return cf;
}

}  // namespace

Coefficients ode_rhs(const Coefficients& cf, const OscillatorParams& p) {
  const double k = p.hbar / p.m;
  const double Om = ck::omega_reduced(p);
  const Complex i{0.0, 1.0};
  const Complex as = std::conj(cf.a);
  const Complex bs = std::conj(cf.b);
  const Complex ds = std::conj(cf.d);

  Coefficients r;
  r.a = i * k * (2.0 * cf.a * cf.c - cf.a1 * ds);
  r.b = i * k * (2.0 * cf.b * cf.c - cf.b1 * cf.d);
  r.a1 = i * (2.0 * k) * (cf.a * cf.d - as * ds);
  r.b1 = i * (2.0 * k) * (cf.b * ds - bs * cf.d);
  r.c = i * k * (4.0 * cf.a * cf.b + cf.c * cf.c - cf.a1 * cf.b1 - ds * cf.d) -
        i * (p.m * Om * Om / p.hbar);
  r.d = i * (2.0 * k) * (cf.a1 * cf.b - as * cf.b1);
  r.t = 1.0;
  return r;
}

double default_step(const Coefficients& cf0, const OscillatorParams& p) {
  const double Om = ck::omega_reduced(p);
  const double rate = std::max(p.hbar * std::abs(cf0.a), p.m * Om);
  return 1e-3 * p.m / rate;
}

Trajectory integrate(const Coefficients& cf0, const OscillatorParams& p,
                     double t_end, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
  if (!(t_end > cf0.t)) {
    throw std::invalid_argument("integrate: t_end must exceed the start time");
  }
  Trajectory traj;
  traj.dt = dt;
  traj.states.push_back(cf0);
  const Coefficients final = propagate(cf0, p, t_end, dt, &traj.states);

  const Coefficients half = propagate(cf0, p, t_end, 0.5 * dt, nullptr);
  Coefficients diff = axpy(final, -1.0, half);
  diff.t = 0.0;
  traj.step_halving_error = max_modulus(diff);
  return traj;
}

Coefficients particular_solution(const ParticularSpec& spec) {
  if (!(spec.d_abs >= 0.0) || !std::isfinite(spec.d_abs)) {
    throw std::invalid_argument("particular_solution: |D| must be finite and >= 0");
  }
  if (!(spec.theta > kPi / 2.0) || !(spec.theta < 3.0 * kPi / 2.0)) {
    throw NormalizabilityError(
        "particular_solution: theta must lie strictly inside (pi/2, 3pi/2); "
        "at the boundary A + A* = 0 and the kernel is not normalizable");
  }
  const double kappa = spec.params.m * ck::omega_reduced(spec.params) /
                       spec.params.hbar;
  const double amod = 0.5 * std::hypot(kappa, spec.d_abs);
  const double c = std::cos(spec.theta);
  const double s = std::sin(spec.theta);
  Coefficients cf;
  // e^{i(pi - theta)} written as (-cos theta, sin theta) so that A D is
  // exactly real and the fixed-point cancellations hold to machine precision.
  cf.a = amod * Complex(-c, s);
  cf.b = std::conj(cf.a);
  cf.d = spec.d_abs * Complex(c, s);
  cf.t = 0.0;
  return cf;
}

Gaussian2D density(const Coefficients& cf, const OscillatorParams& p,
                   double t) {
  Gaussian2D g;
  g.a = cf.a;
  g.a1 = cf.a1;
  g.b = cf.b;
  g.b1 = cf.b1;
  g.c = cf.c;
  g.d = cf.d;
  g.damping_exponent = p.gamma * t / p.m;
  g.norm = 1.0;
  const double tr = trace2d(g);  // throws if not normalizable
  g.norm = 1.0 / tr;
  return g;
}

Gaussian1D reduced_damped(const ParticularSpec& spec, double t) {
  return reduce_over_y(density(particular_solution(spec), spec.params, t));
}

Gaussian1D reduced_amplified(const ParticularSpec& spec, double t) {
  return reduce_over_x(density(particular_solution(spec), spec.params, t));
}

double hermitian_defect(const Coefficients& cf) {
  double d = std::abs(cf.a1.imag());
  d = std::max(d, std::abs(cf.b1.imag()));
  d = std::max(d, std::abs(cf.c.imag()));
  return d;
}

ClosedFormMeasures closed_form_measures(const ParticularSpec& spec) {
  const double kappa = spec.params.m * ck::omega_reduced(spec.params) /
                       spec.params.hbar;
  const double c = std::cos(spec.theta);
  const double s = std::sin(spec.theta);
  const double k2c2 = kappa * kappa * c * c;
  const double denom = k2c2 + spec.d_abs * spec.d_abs;
  ClosedFormMeasures out;
  out.delta_qd = 0.5 * std::sqrt(kappa * kappa / denom);
  out.delta_cc = (std::abs(s) < 1e-9)
                     ? std::numeric_limits<double>::infinity()
                     : 0.5 * std::abs(c / s) * denom;
  return out;
}

Classicality classicality_check(const ParticularSpec& spec) {
  Classicality out;
  const Gaussian1D red = reduced_damped(spec, 0.0);
  out.delta_qd = delta_qd(red);
  out.delta_cc = delta_cc(red);
  const ClosedFormMeasures cfm = closed_form_measures(spec);
  out.delta_qd_closed = cfm.delta_qd;
  out.delta_cc_closed = cfm.delta_cc;

  out.decohered = out.delta_qd < 0.5 - 1e-9;
  out.correlated = out.delta_cc < 1.0;
  out.classical = out.decohered && out.correlated;
  out.decohered_closed = out.delta_qd_closed < 0.5 - 1e-9;
  out.correlated_closed = out.delta_cc_closed < 1.0;
  out.classical_closed = out.decohered_closed && out.correlated_closed;
  return out;
}

}  // namespace qdo::bft
