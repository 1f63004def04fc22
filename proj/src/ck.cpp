#include "qdo/ck.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdo/errors.hpp"

namespace qdo::ck {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kHermiteCap = 64;

void validate(const OscillatorParams& p) {
  if (!(p.m > 0.0) || !(p.omega > 0.0) || !(p.hbar > 0.0) ||
      !std::isfinite(p.gamma)) {
    throw std::invalid_argument("oscillator parameters: need m, omega, hbar > 0");
  }
  if (!(std::abs(p.gamma) < 2.0 * p.m * p.omega)) {
    throw RegimeError("|gamma| < 2*m*omega required (underdamped regime); "
                      "got gamma = " + std::to_string(p.gamma) +
                      ", 2*m*omega = " + std::to_string(2.0 * p.m * p.omega));
  }
}

}  // namespace

double omega_reduced(const OscillatorParams& p) {
  validate(p);
  const double half_rate = p.gamma / (2.0 * p.m);
  return std::sqrt(p.omega * p.omega - half_rate * half_rate);
}

ModeFunction mode_function(const OscillatorParams& p, double t) {
  const double Om = omega_reduced(p);
  const double amp = std::exp(-p.gamma * t / (2.0 * p.m)) /
                     std::sqrt(2.0 * p.hbar * p.m * Om);
  ModeFunction mf;
  mf.u = std::polar(amp, -Om * t);
  mf.u_dot = mf.u * Complex(-p.gamma / (2.0 * p.m), -Om);
  mf.t = t;
  return mf;
}

Complex wronskian(const OscillatorParams& p, const ModeFunction& mf) {
  const double weight = p.hbar * p.m * std::exp(p.gamma * mf.t / p.m);
  return weight * (std::conj(mf.u_dot) * mf.u - mf.u_dot * std::conj(mf.u));
}

double eom_residual(const OscillatorParams& p, double t) {
  const double rate = std::max(std::abs(p.gamma), p.omega * p.m);
  const double h = 1e-4 * std::min(1.0 / p.omega, p.m / rate);
  const Complex um = mode_function(p, t - h).u;
  const Complex u0 = mode_function(p, t).u;
  const Complex up = mode_function(p, t + h).u;
  const Complex udd = (up - 2.0 * u0 + um) / (h * h);
  const Complex ud = (up - um) / (2.0 * h);
  const double res = std::abs(udd + (p.gamma / p.m) * ud + p.omega * p.omega * u0);
  // Normalized by the local driving-term scale: growing modes would
  // otherwise hit the difference quotient's roundoff floor.
  return res / std::max(1.0, p.omega * p.omega * std::abs(u0));
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n < 0");
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

Complex wavefunction(const OscillatorParams& p, int n, double x, double t) {
  if (n < 0 || n > kHermiteCap) {
    throw std::invalid_argument("wavefunction: n must be in [0, 64]");
  }
  const double Om = omega_reduced(p);
  const double ef = std::exp(p.gamma * t / p.m);
  const double alpha = p.m * Om * ef / p.hbar;  // Gaussian width parameter
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double pref = std::pow(alpha / kPi, 0.25) /
                      std::sqrt(std::pow(2.0, n) * fact);
  const Complex phase = std::polar(1.0, -(n + 0.5) * Om * t);
  // Gaussian phase sign: +i gamma/(4 hbar), so that the n = 0 outer product
  // Psi(x')Psi*(x) carries gamma_mu = -i gamma/hbar, matching ck_density.
  const Complex expo =
      Complex(-0.5 * alpha, ef * p.gamma / (4.0 * p.hbar)) * (x * x);
  return pref * phase * hermite(n, std::sqrt(alpha) * x) * std::exp(expo);
}

Dispersions dispersions(const OscillatorParams& p, double t) {
  const double Om = omega_reduced(p);
  const double ef = std::exp(p.gamma * t / p.m);
  return {p.hbar / (2.0 * p.m * Om * ef),
          p.hbar * p.m * p.omega * p.omega * ef / (2.0 * Om)};
}

double uncertainty(const OscillatorParams& p) {
  return p.hbar * p.omega / (2.0 * omega_reduced(p));
}

double uncertainty_at(const OscillatorParams& p, double t) {
  const Dispersions d = dispersions(p, t);
  return std::sqrt(d.x2 * d.p2);
}

double energy_expectation(const OscillatorParams& p) {
  return p.hbar * p.omega * p.omega / (2.0 * omega_reduced(p));
}

double energy_at(const OscillatorParams& p, double t) {
  const Dispersions d = dispersions(p, t);
  const double m_t = p.m * std::exp(p.gamma * t / p.m);
  return d.p2 / (2.0 * m_t) + 0.5 * m_t * p.omega * p.omega * d.x2;
}

double energy_closed_form(const OscillatorParams& p) {
  return p.hbar * p.omega * p.omega / omega_reduced(p);
}

Gaussian1D ck_density(const OscillatorParams& p, double t) {
  const double Om = omega_reduced(p);
  const double ef = std::exp(p.gamma * t / p.m);
  Gaussian1D g;
  g.gamma_c = p.m * Om * ef / p.hbar;
  g.gamma_delta = g.gamma_c;
  g.gamma_mu = Complex(0.0, -p.gamma * ef / p.hbar);
  g.norm = std::sqrt(p.m * Om * ef / (kPi * p.hbar));
  return g;
}

}  // namespace qdo::ck
