#include <doctest.h>

#include <cmath>
#include <complex>

#include "qdo/ck.hpp"
#include "qdo/errors.hpp"
#include "qdo/gaussian.hpp"
#include "qdo/grid.hpp"

using namespace qdo;

namespace {

constexpr double kPi = 3.14159265358979323846;

OscillatorParams unit_damped() {
  OscillatorParams p;
  p.gamma = 1.0;
  return p;
}

// Independent oracle: integrate u'' + (gamma/m) u' + omega^2 u = 0 with a
// plain RK4 on the first-order system, from the mode's initial data.
Complex rk4_mode_oracle(const OscillatorParams& p, double t_end, double dt) {
  const double Om = ck::omega_reduced(p);
  Complex u = 1.0 / std::sqrt(2.0 * p.hbar * p.m * Om);
  Complex v = u * Complex(-p.gamma / (2.0 * p.m), -Om);
  auto acc = [&](Complex uu, Complex vv) {
    return -(p.gamma / p.m) * vv - p.omega * p.omega * uu;
  };
  const int n = static_cast<int>(std::lround(t_end / dt));
  for (int i = 0; i < n; ++i) {
    const Complex k1u = v, k1v = acc(u, v);
    const Complex k2u = v + 0.5 * dt * k1v, k2v = acc(u + 0.5 * dt * k1u, v + 0.5 * dt * k1v);
    const Complex k3u = v + 0.5 * dt * k2v, k3v = acc(u + 0.5 * dt * k2u, v + 0.5 * dt * k2v);
    const Complex k4u = v + dt * k3v, k4v = acc(u + dt * k3u, v + dt * k3v);
    u += dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return u;
}

}  // namespace

TEST_CASE("omega_reduced values and regime rejection") {
  OscillatorParams p;
  CHECK(ck::omega_reduced(p) == doctest::Approx(1.0));

  p.gamma = 1.0;
  CHECK(ck::omega_reduced(p) == doctest::Approx(0.866025403784).epsilon(1e-12));

  p.gamma = 2.0;  // critical damping is rejected as degenerate
  CHECK_THROWS_AS(ck::omega_reduced(p), RegimeError);
  p.gamma = 2.5;
  CHECK_THROWS_AS(ck::omega_reduced(p), RegimeError);
  p.gamma = -2.5;
  CHECK_THROWS_AS(ck::omega_reduced(p), RegimeError);

  p.gamma = 0.0;
  p.m = -1.0;
  CHECK_THROWS_AS(ck::omega_reduced(p), std::invalid_argument);
}

TEST_CASE("mode function value, modulus law, Wronskian") {
  const OscillatorParams p = unit_damped();

  const ModeFunction m0 = ck::mode_function(p, 0.0);
  CHECK(m0.u.real() == doctest::Approx(0.759835685652).epsilon(1e-12));
  CHECK(m0.u.imag() == doctest::Approx(0.0));

  // |u(t)|^2 = e^{-gamma t/m}/(2 hbar m Omega), cross-checked by direct
  // integration of the equation of motion
  const ModeFunction m1 = ck::mode_function(p, 1.0);
  CHECK(std::norm(m1.u) == doctest::Approx(0.212395294390).epsilon(1e-12));
  const Complex u_oracle = rk4_mode_oracle(p, 1.0, 1e-4);
  CHECK(std::abs(m1.u - u_oracle) < 1e-10);

  for (double t : {0.0, 1.0, 5.0}) {
    const Complex w = ck::wronskian(p, ck::mode_function(p, t));
    CHECK(std::abs(w - Complex(0.0, 1.0)) < 1e-12);
  }

  for (double t : {0.0, 0.5, 2.0, 8.0}) {
    CHECK(ck::eom_residual(p, t) < 1e-6);
  }
}

TEST_CASE("wavefunction: ground state, node, normalization, guard") {
  const OscillatorParams p = unit_damped();

  // (Omega/pi)^{1/4} at the origin
  const Complex psi0 = ck::wavefunction(p, 0, 0.0, 0.0);
  CHECK(psi0.real() == doctest::Approx(0.724594761163).epsilon(1e-12));
  CHECK(psi0.imag() == doctest::Approx(0.0));

  // odd Hermite vanishes at the origin
  CHECK(std::abs(ck::wavefunction(p, 1, 0.0, 0.0)) < 1e-300);
  CHECK(std::abs(ck::wavefunction(p, 1, 0.0, 2.3)) < 1e-300);

  // grid quadrature of |Psi_0|^2 and |Psi_3|^2 at t = 1
  const Gaussian1D g = ck::ck_density(p, 1.0);
  const grid::Grid1D gr = grid::grid_for(g, 512);
  for (int n : {0, 3}) {
    double sum = 0.0;
    for (int i = 0; i < gr.n; ++i) {
      sum += gr.weight(i) * std::norm(ck::wavefunction(p, n, gr.point(i), 1.0));
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
  }

  CHECK_THROWS_AS(ck::wavefunction(p, 65, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ck::wavefunction(p, -1, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("hermite recurrence spot checks") {
  CHECK(ck::hermite(0, 0.7) == 1.0);
  CHECK(ck::hermite(1, 0.7) == doctest::Approx(1.4));
  // H_3(x) = 8x^3 - 12x
  const double x = 0.9;
  CHECK(ck::hermite(3, x) == doctest::Approx(8 * x * x * x - 12 * x).epsilon(1e-14));
  // H_4(x) = 16x^4 - 48x^2 + 12
  CHECK(ck::hermite(4, x) ==
        doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12).epsilon(1e-14));
}

TEST_CASE("dispersions and their exponential laws") {
  const OscillatorParams p = unit_damped();
  const Dispersions d0 = ck::dispersions(p, 0.0);
  CHECK(d0.x2 == doctest::Approx(0.577350269190).epsilon(1e-12));
  CHECK(d0.p2 == doctest::Approx(0.577350269190).epsilon(1e-12));

  const Dispersions d1 = ck::dispersions(p, p.m / p.gamma);
  CHECK(d1.x2 == doctest::Approx(d0.x2 / std::exp(1.0)).epsilon(1e-13));
  CHECK(d1.p2 == doctest::Approx(d0.p2 * std::exp(1.0)).epsilon(1e-13));

  // static oscillator
  OscillatorParams q;
  const Dispersions ds = ck::dispersions(q, 3.0);
  CHECK(ds.x2 == doctest::Approx(0.5));
  CHECK(ds.p2 == doctest::Approx(0.5));

  // grid cross-check of <x^2> from the ground-state wave function
  const Gaussian1D g = ck::ck_density(p, 0.0);
  const grid::Grid1D gr = grid::grid_for(g, 512);
  double x2 = 0.0;
  for (int i = 0; i < gr.n; ++i) {
    x2 += gr.weight(i) * gr.point(i) * gr.point(i) *
          std::norm(ck::wavefunction(p, 0, gr.point(i), 0.0));
  }
  CHECK(x2 == doctest::Approx(d0.x2).epsilon(1e-10));
}

TEST_CASE("uncertainty is constant and bounded below") {
  const OscillatorParams p = unit_damped();
  CHECK(ck::uncertainty(p) == doctest::Approx(0.577350269190).epsilon(1e-12));

  OscillatorParams q;  // no damping: minimum uncertainty
  CHECK(ck::uncertainty(q) == doctest::Approx(0.5));

  for (double t : {0.0, 1.0, 3.0}) {
    CHECK(std::abs(ck::uncertainty_at(p, t) - ck::uncertainty(p)) < 1e-12);
  }
  CHECK(ck::uncertainty(p) >= 0.5 * p.hbar);
}

TEST_CASE("energy expectation: constant, derived value, closed-form variant") {
  const OscillatorParams p = unit_damped();
  CHECK(ck::energy_expectation(p) == doctest::Approx(0.577350269190).epsilon(1e-12));
  CHECK(std::abs(ck::energy_at(p, 0.0) - ck::energy_at(p, 7.0)) < 1e-12);

  OscillatorParams q;  // gamma = 0 reproduces the ground-state energy
  CHECK(ck::energy_expectation(q) == doctest::Approx(0.5));
  // the closed-form variant misses that limit by a factor 2
  CHECK(ck::energy_closed_form(q) == doctest::Approx(1.0));
  CHECK(ck::energy_closed_form(p) ==
        doctest::Approx(2.0 * ck::energy_expectation(p)).epsilon(1e-14));
}

TEST_CASE("ck_density coefficients and measures") {
  const OscillatorParams p = unit_damped();
  const Gaussian1D g = ck::ck_density(p, 0.0);
  CHECK(g.gamma_c == doctest::Approx(0.866025403784).epsilon(1e-12));
  CHECK(g.gamma_delta == doctest::Approx(0.866025403784).epsilon(1e-12));
  CHECK(g.gamma_mu.real() == 0.0);
  CHECK(g.gamma_mu.imag() == doctest::Approx(-1.0));
  CHECK(g.norm == doctest::Approx(0.525037567904).epsilon(1e-12));

  for (double t : {0.0, 0.3, 2.0}) {
    CHECK(delta_qd(ck::ck_density(p, t)) == 0.5);
  }

  OscillatorParams q;  // zero damping: no phase, infinite delta_cc
  const Gaussian1D g0 = ck::ck_density(q, 1.0);
  CHECK(std::abs(g0.gamma_mu) == 0.0);
  CHECK(std::isinf(delta_cc(g0)));
}

TEST_CASE("density equals the ground-state outer product on a grid") {
  const OscillatorParams p = unit_damped();
  const double t = 0.6;
  const Gaussian1D g = ck::ck_density(p, t);
  const grid::Grid1D gr = grid::grid_for(g, 64);
  double rel = 0.0;
  for (int i = 0; i < gr.n; ++i) {
    for (int j = 0; j < gr.n; ++j) {
      const Complex outer = ck::wavefunction(p, 0, gr.point(i), t) *
                            std::conj(ck::wavefunction(p, 0, gr.point(j), t));
      const Complex dens = evaluate1d(g, gr.point(i), gr.point(j));
      if (std::abs(dens) > 1e-8 * g.norm) {
        rel = std::max(rel, std::abs(outer - dens) / std::abs(dens));
      }
    }
  }
  CHECK(rel < 1e-6);
}
