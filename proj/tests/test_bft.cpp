#include <doctest.h>

#include <cmath>
#include <complex>

#include "qdo/bft.hpp"
#include "qdo/errors.hpp"
#include "qdo/gaussian.hpp"
#include "qdo/grid.hpp"

using namespace qdo;

namespace {

constexpr double kPi = 3.14159265358979323846;

// m Omega / hbar = 1 with gamma = 1
OscillatorParams unit_momega() {
  OscillatorParams p;
  p.gamma = 1.0;
  p.omega = std::hypot(1.0, 0.5);
  return p;
}

double max_component(const bft::Coefficients& cf) {
  double m = std::abs(cf.a);
  m = std::max(m, std::abs(cf.a1));
  m = std::max(m, std::abs(cf.b));
  m = std::max(m, std::abs(cf.b1));
  m = std::max(m, std::abs(cf.c));
  m = std::max(m, std::abs(cf.d));
  return m;
}

double max_difference(const bft::Coefficients& x, const bft::Coefficients& y) {
  double m = std::abs(x.a - y.a);
  m = std::max(m, std::abs(x.a1 - y.a1));
  m = std::max(m, std::abs(x.b - y.b));
  m = std::max(m, std::abs(x.b1 - y.b1));
  m = std::max(m, std::abs(x.c - y.c));
  m = std::max(m, std::abs(x.d - y.d));
  return m;
}

}  // namespace

TEST_CASE("ode_rhs: zero input drives only the cross coefficient") {
  const OscillatorParams p = unit_momega();
  const double Om = ck::omega_reduced(p);
  const bft::Coefficients rhs = bft::ode_rhs(bft::Coefficients{}, p);
  CHECK(std::abs(rhs.a) == 0.0);
  CHECK(std::abs(rhs.a1) == 0.0);
  CHECK(std::abs(rhs.b) == 0.0);
  CHECK(std::abs(rhs.b1) == 0.0);
  CHECK(std::abs(rhs.d) == 0.0);
  CHECK(rhs.c.real() == doctest::Approx(0.0));
  CHECK(rhs.c.imag() == doctest::Approx(-p.m * Om * Om / p.hbar).epsilon(1e-15));
}

TEST_CASE("ode_rhs: stationary family is a fixed point") {
  const OscillatorParams p = unit_momega();
  bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
  CHECK(max_component(bft::ode_rhs(bft::particular_solution(spec), p)) < 1e-14);
}

TEST_CASE("ode_rhs: conjugation symmetry on the a = b* family") {
  // a = b* with arbitrary modulus (off the stationary constraint), d phase
  // opposite to a so that a*d is real; a1 = b1 = c = 0.  On this family the
  // x and y rates stay conjugate.
  const OscillatorParams p = unit_momega();
  bft::Coefficients cf;
  const double theta = 2.2;
  cf.a = 0.9 * Complex(-std::cos(theta), std::sin(theta));
  cf.b = std::conj(cf.a);
  cf.d = 1.3 * Complex(std::cos(theta), std::sin(theta));
  const bft::Coefficients rhs = bft::ode_rhs(cf, p);
  CHECK(std::abs(rhs.a - std::conj(rhs.b)) < 1e-15);
  CHECK(std::abs(rhs.a1 - std::conj(rhs.b1)) < 1e-15);
  CHECK(std::abs(rhs.c) > 1e-3);  // genuinely off the fixed point
}

TEST_CASE("integrate: fixed point stays, zero-dissipation state stays") {
  const OscillatorParams p = unit_momega();
  bft::ParticularSpec spec{1.0, 2.5, p};
  const bft::Coefficients cf0 = bft::particular_solution(spec);
  const bft::Trajectory traj = bft::integrate(cf0, p, 2.0, 1e-3);
  CHECK(max_difference(traj.states.back(), cf0) < 1e-10);
  CHECK(traj.step_halving_error < 1e-12);

  // undamped pair: A = B = m omega / 2 hbar balances the cross-term drive
  OscillatorParams q;  // gamma = 0, omega = 1
  bft::Coefficients zd;
  zd.a = zd.b = 0.5;
  const bft::Trajectory tz = bft::integrate(zd, q, 2.0, 1e-3);
  CHECK(max_difference(tz.states.back(), zd) < 1e-10);
}

TEST_CASE("integrate: fourth-order convergence under step halving") {
  const OscillatorParams p = unit_momega();
  bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
  bft::Coefficients cf0 = bft::particular_solution(spec);
  cf0.c += Complex(0.0, 0.2);

  const bft::Coefficients ref =
      bft::integrate(cf0, p, 1.0, 1.0 / 4096.0).states.back();
  const double e1 =
      max_difference(bft::integrate(cf0, p, 1.0, 0.04).states.back(), ref);
  const double e2 =
      max_difference(bft::integrate(cf0, p, 1.0, 0.02).states.back(), ref);
  const double ratio = e1 / e2;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("integrate: argument validation and blow-up") {
  const OscillatorParams p = unit_momega();
  const bft::Coefficients cf0 = bft::particular_solution({1.0, 2.5, p});
  CHECK_THROWS_AS(bft::integrate(cf0, p, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(bft::integrate(cf0, p, -1.0, 0.01), std::invalid_argument);

  bft::Coefficients wild;
  wild.c = Complex(0.0, -1e11);  // Riccati-type runaway in one step
  CHECK_THROWS_AS(bft::integrate(wild, p, 1.0, 1e-3), BlowUpError);
}

TEST_CASE("particular_solution values and domain") {
  const OscillatorParams p = unit_momega();

  // |D| = 0, theta = pi: real A = m Omega / 2 hbar, D = 0
  const bft::Coefficients c0 = bft::particular_solution({0.0, kPi, p});
  CHECK(c0.a.real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(c0.a.imag()) < 1e-16);
  CHECK(std::abs(c0.d) == 0.0);

  const bft::Coefficients c2 =
      bft::particular_solution({2.0, 3.0 * kPi / 4.0, p});
  CHECK(std::abs(c2.a) == doctest::Approx(1.118033988750).epsilon(1e-12));
  CHECK(std::arg(c2.a) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK(std::abs(c2.b - std::conj(c2.a)) == 0.0);

  CHECK_THROWS_AS(bft::particular_solution({1.0, kPi / 2.0, p}),
                  NormalizabilityError);
  CHECK_THROWS_AS(bft::particular_solution({1.0, 3.0 * kPi / 2.0, p}),
                  NormalizabilityError);
  CHECK_THROWS_AS(bft::particular_solution({-1.0, kPi, p}),
                  std::invalid_argument);
}

TEST_CASE("density: norm closed form and grid traces") {
  const OscillatorParams p = unit_momega();
  bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
  const bft::Coefficients cf = bft::particular_solution(spec);
  const Gaussian2D g = bft::density(cf, p, 0.0);

  CHECK(g.norm == doctest::Approx(0.225079079039).epsilon(1e-12));
  const double s = 2.0 * cf.a.real();
  const double b = 2.0 * cf.d.real();
  CHECK(g.norm ==
        doctest::Approx(std::sqrt(s * s - 0.25 * b * b) / kPi).epsilon(1e-12));

  for (double t : {0.0, 1.0, 5.0}) {
    const Gaussian2D gt = bft::density(cf, p, t);
    const auto [gx, gy] = grid::grids_for(gt, 96);
    CHECK(grid::GridDM2{gt, gx, gy}.trace() == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("density: zero-dissipation kernel matches the decoupled product") {
  OscillatorParams q;  // gamma = 0, omega = 1, m = hbar = 1
  bft::Coefficients zd;
  zd.a = zd.b = 0.5;
  const Gaussian2D g = bft::density(zd, q, 0.7);
  CHECK(g.norm == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  // pointwise: (m omega/pi hbar) exp[-(m omega/2 hbar)(x'^2+y'^2+x^2+y^2)]
  for (double x : {-0.8, 0.3}) {
    for (double y : {-0.5, 0.9}) {
      const Complex v = evaluate2d(g, x, y, 0.2, -0.4);
      const double expected =
          (1.0 / kPi) *
          std::exp(-0.5 * (x * x + y * y + 0.2 * 0.2 + 0.4 * 0.4));
      CHECK(v.real() == doctest::Approx(expected).epsilon(1e-12));
      CHECK(std::abs(v.imag()) < 1e-16);
    }
  }
}

TEST_CASE("reduced kernels: frozen coefficients and mirror laws") {
  const OscillatorParams p = unit_momega();
  bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};

  const Gaussian1D rd = bft::reduced_damped(spec, 0.0);
  CHECK(rd.gamma_c == doctest::Approx(0.316227766017).epsilon(1e-11));
  CHECK(rd.gamma_delta == doctest::Approx(2.846049894152).epsilon(1e-11));
  CHECK(rd.gamma_mu.imag() == doctest::Approx(-0.632455532034).epsilon(1e-11));

  const Gaussian1D ra = bft::reduced_amplified(spec, 0.0);
  CHECK(ra.gamma_c == doctest::Approx(rd.gamma_c).epsilon(1e-14));
  CHECK(ra.gamma_delta == doctest::Approx(rd.gamma_delta).epsilon(1e-14));
  CHECK(ra.gamma_mu.imag() == doctest::Approx(-rd.gamma_mu.imag()).epsilon(1e-14));

  // same measures for both subsystems at t = 0
  CHECK(delta_qd(ra) == doctest::Approx(delta_qd(rd)).epsilon(1e-14));
  CHECK(delta_cc(ra) == doctest::Approx(delta_cc(rd)).epsilon(1e-14));

  // e^{-gamma t/m} shrink on the amplified side
  const Gaussian1D ra_t = bft::reduced_amplified(spec, p.m / p.gamma);
  CHECK(ra_t.gamma_c == doctest::Approx(ra.gamma_c / std::exp(1.0)).epsilon(1e-12));

  // mirror: amplified(gamma) == damped(-gamma, D -> D*)
  bft::ParticularSpec mir = spec;
  mir.theta = 2.0 * kPi - spec.theta;
  mir.params.gamma = -p.gamma;
  const Gaussian1D rm = bft::reduced_damped(mir, 0.8);
  const Gaussian1D ry = bft::reduced_amplified(spec, 0.8);
  CHECK(std::abs(rm.gamma_c - ry.gamma_c) < 1e-12);
  CHECK(std::abs(rm.gamma_delta - ry.gamma_delta) < 1e-12);
  CHECK(std::abs(rm.gamma_mu - ry.gamma_mu) < 1e-12);
}

TEST_CASE("closed-form measures: values and divergence") {
  const OscillatorParams p = unit_momega();

  const bft::ClosedFormMeasures m1 =
      bft::closed_form_measures({2.0, 3.0 * kPi / 4.0, p});
  CHECK(m1.delta_qd == doctest::Approx(0.235702260396).epsilon(1e-12));
  CHECK(m1.delta_cc == doctest::Approx(2.25).epsilon(1e-12));

  // theta -> pi/2+ with |D| > m Omega/hbar: strong decoherence, small
  // closed-form correlation measure (~ 1/(2|D|) and |cot|/2 * |D|^2 here)
  const bft::ClosedFormMeasures m2 =
      bft::closed_form_measures({5.0, kPi / 2.0 + 0.05, p});
  CHECK(m2.delta_qd == doctest::Approx(0.0999950).epsilon(1e-4));
  CHECK(m2.delta_cc < 0.7);

  // |D| = 0, theta = pi: pure product state; cot diverges -> sentinel
  const bft::ClosedFormMeasures m3 = bft::closed_form_measures({0.0, kPi, p});
  CHECK(m3.delta_qd == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::isinf(m3.delta_cc));
  // the definition-based route leaves a sin(pi) rounding residue in
  // gamma_mu, so it reports an effectively infinite value rather than the
  // exact-zero sentinel
  CHECK(delta_cc(bft::reduced_damped({0.0, kPi, p}, 0.0)) > 1e12);
}

TEST_CASE("classicality_check verdicts") {
  const OscillatorParams p = unit_momega();

  const bft::Classicality strong =
      bft::classicality_check({5.0, kPi / 2.0 + 0.05, p});
  CHECK(strong.decohered);
  CHECK(strong.delta_qd < 0.1);

  const bft::Classicality pure = bft::classicality_check({0.0, kPi, p});
  CHECK_FALSE(pure.decohered);
  CHECK(pure.delta_qd == doctest::Approx(0.5));
  CHECK_FALSE(pure.classical);

  // zero-dissipation path: D -> 0 as gamma -> 0, nothing classical
  OscillatorParams q;
  const bft::Classicality zd = bft::classicality_check({0.0, kPi, q});
  CHECK_FALSE(zd.classical);
}

TEST_CASE("hermitian_defect flags exploratory coefficient sets") {
  const OscillatorParams p = unit_momega();
  bft::Coefficients cf = bft::particular_solution({1.0, 2.5, p});
  CHECK(bft::hermitian_defect(cf) == 0.0);
  cf.c += Complex(0.0, 0.3);
  CHECK(bft::hermitian_defect(cf) == doctest::Approx(0.3));
}
