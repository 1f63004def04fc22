#include "qdo/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "qdo/amplified.hpp"
#include "qdo/bft.hpp"
#include "qdo/ck.hpp"
#include "qdo/coupled.hpp"
#include "qdo/errors.hpp"
#include "qdo/gaussian.hpp"
#include "qdo/grid.hpp"

namespace qdo::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

CheckResult check(const std::string& name, double defect, double tol,
                  const std::string& detail = "") {
  CheckResult r;
  r.name = name;
  r.defect = defect;
  r.tol = tol;
  r.pass = defect < tol;
  r.detail = detail;
  return r;
}

CheckResult note(const std::string& name, const std::string& detail) {
  CheckResult r;
  r.name = name;
  r.informational = true;
  r.detail = detail;
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Random underdamped parameter set, kept away from the critical boundary.
OscillatorParams random_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  OscillatorParams p;
  p.m = 0.5 + 1.5 * u(rng);
  p.omega = 0.5 + 1.5 * u(rng);
  p.gamma = (0.05 + 0.95 * u(rng)) * 1.5 * p.m * p.omega;
  p.hbar = 1.0;
  return p;
}

bft::ParticularSpec random_spec(std::mt19937& rng, double d_max = 4.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bft::ParticularSpec spec;
  spec.d_abs = d_max * u(rng);
  spec.theta = kPi / 2.0 + 0.1 + (kPi - 0.2) * u(rng);
  spec.params.m = 1.0;
  spec.params.hbar = 1.0;
  spec.params.gamma = 0.2 + 1.0 * u(rng);
  // omega chosen so m*Omega/hbar = 1 regardless of gamma
  const double half = spec.params.gamma / (2.0 * spec.params.m);
  spec.params.omega = std::hypot(1.0 * spec.params.hbar / spec.params.m, half);
  return spec;
}

}  // namespace

std::vector<CheckResult> suite_gaussian() {
  std::vector<CheckResult> out;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  // purity = 2 * delta_qd for normalized kernels, over random valid triples
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    Gaussian1D g;
    g.gamma_c = 0.1 + 5.0 * u(rng);
    g.gamma_delta = g.gamma_c * (1.0 + 4.0 * u(rng));
    g.gamma_mu = Complex(0.0, -2.0 * u(rng));
    g.norm = std::sqrt(g.gamma_c / kPi);
    worst = std::max(worst, std::abs(purity1d(g) - 2.0 * delta_qd(g)));
  }
  out.push_back(check("gaussian.purity_qd_identity", worst, 1e-12));

  // Hermiticity of evaluated kernels on random point pairs
  {
    OscillatorParams p;
    p.gamma = 1.0;
    const Gaussian1D g1 = ck::ck_density(p, 0.7);
    bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
    const Gaussian1D g2 = bft::reduced_damped(spec, 0.4);
    double h1 = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double a = 4.0 * u(rng) - 2.0;
      const double b = 4.0 * u(rng) - 2.0;
      h1 = std::max(h1, std::abs(evaluate1d(g1, a, b) -
                                 std::conj(evaluate1d(g1, b, a))));
      h1 = std::max(h1, std::abs(evaluate1d(g2, a, b) -
                                 std::conj(evaluate1d(g2, b, a))));
    }
    out.push_back(check("gaussian.hermiticity_1d", h1, 1e-12));

    const Gaussian2D g3 = bft::density(bft::particular_solution(spec), p, 0.3);
    double h2 = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double xs[4] = {2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0,
                            2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0};
      h2 = std::max(h2, std::abs(evaluate2d(g3, xs[0], xs[1], xs[2], xs[3]) -
                                 std::conj(evaluate2d(g3, xs[2], xs[3], xs[0],
                                                      xs[1]))));
    }
    out.push_back(check("gaussian.hermiticity_2d", h2, 1e-12));
  }

  // trace1d(reduce_over_y(g2)) = 1 whenever trace2d(g2) = 1
  {
    double w = 0.0;
    for (int k = 0; k < 20; ++k) {
      const bft::ParticularSpec spec = random_spec(rng);
      const Gaussian2D g2 =
          bft::density(bft::particular_solution(spec), spec.params, u(rng));
      w = std::max(w, std::abs(trace1d(reduce_over_y(g2)) - 1.0));
      w = std::max(w, std::abs(trace1d(reduce_over_x(g2)) - 1.0));
    }
    out.push_back(check("gaussian.reduction_trace", w, 1e-10));
  }

  // trace2d invariance under damping_exponent shifts
  {
    bft::ParticularSpec spec = random_spec(rng);
    Gaussian2D g2 =
        bft::density(bft::particular_solution(spec), spec.params, 0.0);
    const double t0 = trace2d(g2);
    double w = 0.0;
    for (double e : {-1.0, 0.4, 1.7, 3.0}) {
      g2.damping_exponent = e;
      w = std::max(w, std::abs(trace2d(g2) - t0));
    }
    out.push_back(check("gaussian.trace2d_rescaling", w, 1e-10));
  }

  // grid agreement for one-mode trace and purity
  {
    OscillatorParams p;
    p.gamma = 1.0;
    const Gaussian1D g = ck::ck_density(p, 1.0);
    const grid::GridDM dm = grid::discretize1d(g, grid::grid_for(g, 256));
    const double w = std::max(std::abs(dm.trace() - trace1d(g)),
                              std::abs(dm.purity() - purity1d(g)));
    out.push_back(check("gaussian.grid_agreement", w, 1e-6));
  }
  return out;
}

std::vector<CheckResult> suite_ck() {
  std::vector<CheckResult> out;
  std::mt19937 rng(23);
  OscillatorParams p;
  p.gamma = 1.0;

  // Wronskian conservation and EOM residual along the trajectory
  {
    double wrons = 0.0, eom = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = 10.0 * p.m / p.gamma * i / 99.0;
      wrons = std::max(wrons, std::abs(ck::wronskian(p, ck::mode_function(p, t)) -
                                       Complex(0.0, 1.0)));
      eom = std::max(eom, ck::eom_residual(p, t));
    }
    out.push_back(check("ck.wronskian.conservation", wrons, 1e-12));
    out.push_back(check("ck.mode.eom_residual", eom, 1e-6));
  }

  // density = outer product of the ground-state wave function
  {
    const double t = 0.8;
    const Gaussian1D g = ck::ck_density(p, t);
    const grid::Grid1D gr = grid::grid_for(g, 96);
    double rel = 0.0;
    const double vmax = g.norm;
    for (int i = 0; i < gr.n; ++i) {
      for (int j = 0; j < gr.n; ++j) {
        const Complex outer = ck::wavefunction(p, 0, gr.point(i), t) *
                              std::conj(ck::wavefunction(p, 0, gr.point(j), t));
        const Complex dens = evaluate1d(g, gr.point(i), gr.point(j));
        if (std::abs(dens) > 1e-8 * vmax) {
          rel = std::max(rel, std::abs(outer - dens) / std::abs(dens));
        }
      }
    }
    out.push_back(check("ck.density.outer_product", rel, 1e-6));
  }

  // delta_qd exactly 1/2, purity exactly 1, for random parameter sets
  {
    double dqd = 0.0, pur = 0.0;
    for (int k = 0; k < 20; ++k) {
      const OscillatorParams q = random_params(rng);
      for (double t : {0.0, 1.0, 5.0}) {
        const Gaussian1D g = ck::ck_density(q, t);
        dqd = std::max(dqd, std::abs(delta_qd(g) - 0.5));
        pur = std::max(pur, std::abs(purity1d(g) - 1.0));
      }
    }
    out.push_back(check("ck.delta_qd.half", dqd, 1e-15));
    out.push_back(check("ck.purity.pure", pur, 1e-10));
  }

  // delta_cc growth law
  {
    double w = 0.0;
    for (double t : {0.3, 1.0, 2.5}) {
      const double ratio = delta_cc(ck::ck_density(p, t)) /
                           delta_cc(ck::ck_density(p, 0.0));
      const double expected = std::exp(p.gamma * t / p.m);
      w = std::max(w, std::abs(ratio - expected) / expected);
    }
    out.push_back(check("ck.delta_cc.scaling", w, 1e-10));
  }

  // constancy of uncertainty and energy across t
  {
    double du = 0.0, de = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = 10.0 * i / 100.0;
      du = std::max(du, std::abs(ck::uncertainty_at(p, t) - ck::uncertainty(p)));
      de = std::max(de, std::abs(ck::energy_at(p, t) - ck::energy_expectation(p)));
    }
    out.push_back(check("ck.uncertainty.constant", du, 1e-12));
    out.push_back(check("ck.energy.constant", de, 1e-12));
  }

  // ground-state normalization by grid quadrature
  {
    const double t = 1.0;
    const Gaussian1D g = ck::ck_density(p, t);
    const grid::Grid1D gr = grid::grid_for(g, 512);
    double sum = 0.0;
    for (int i = 0; i < gr.n; ++i) {
      sum += gr.weight(i) * std::norm(ck::wavefunction(p, 0, gr.point(i), t));
    }
    out.push_back(check("ck.wavefunction.normalized", std::abs(sum - 1.0), 1e-8));
  }

  out.push_back(note("closed_form_note.energy",
                     "constant energy: dispersion-based = " +
                         fmt(ck::energy_expectation(p)) +
                         ", closed-form variant = " +
                         fmt(ck::energy_closed_form(p)) +
                         " (factor-2 disagreement; dispersion-based value "
                         "satisfies the gamma -> 0 ground-state limit)"));
  return out;
}

std::vector<CheckResult> suite_bft() {
  std::vector<CheckResult> out;
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  OscillatorParams p;  // m Omega / hbar = 1
  p.gamma = 1.0;
  p.omega = std::hypot(1.0, 0.5);

  // stationary family is a fixed point of the coefficient system
  {
    double w = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        bft::ParticularSpec spec;
        spec.d_abs = 10.0 * i / 19.0;
        spec.theta = kPi / 2.0 + 0.05 +
                     (kPi - 0.1) * j / 19.0;
        spec.params = p;
        const bft::Coefficients rhs =
            bft::ode_rhs(bft::particular_solution(spec), p);
        for (Complex v : {rhs.a, rhs.a1, rhs.b, rhs.b1, rhs.c, rhs.d}) {
          w = std::max(w, std::abs(v));
        }
      }
    }
    out.push_back(check("bft.particular.fixed_point", w, 1e-13));
  }

  // integrating from the fixed point stays put
  {
    bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
    const bft::Coefficients cf0 = bft::particular_solution(spec);
    const bft::Trajectory traj =
        bft::integrate(cf0, p, 3.0, bft::default_step(cf0, p));
    const bft::Coefficients& cf = traj.states.back();
    double w = std::abs(cf.a - cf0.a);
    w = std::max(w, std::abs(cf.a1 - cf0.a1));
    w = std::max(w, std::abs(cf.b - cf0.b));
    w = std::max(w, std::abs(cf.b1 - cf0.b1));
    w = std::max(w, std::abs(cf.c - cf0.c));
    w = std::max(w, std::abs(cf.d - cf0.d));
    out.push_back(check("bft.integrate.fixed_point_stationary", w, 1e-10));
  }

  // a = b*, a1 = b1* retention along a perturbed trajectory
  {
    bft::ParticularSpec spec{1.5, 2.4, p};
    bft::Coefficients cf0 = bft::particular_solution(spec);
    cf0.c += Complex(0.0, 0.1);
    const bft::Trajectory traj = bft::integrate(cf0, p, 2.0, 1e-3);
    double w = 0.0;
    for (const auto& cf : traj.states) {
      w = std::max(w, std::abs(cf.a - std::conj(cf.b)));
      w = std::max(w, std::abs(cf.a1 - std::conj(cf.b1)));
    }
    out.push_back(check("bft.integrate.symmetry_retention", w, 1e-8));
  }

  // renormalized trace along a perturbed trajectory, against the grid
  {
    bft::ParticularSpec spec{1.0, 2.6, p};
    bft::Coefficients cf0 = bft::particular_solution(spec);
    cf0.c += 0.05;
    const double t_end = 5.0 / std::max(p.gamma, 1.0);
    const bft::Trajectory traj = bft::integrate(cf0, p, t_end, 2e-3);
    double w = 0.0;
    const size_t stride = traj.states.size() / 4;
    for (size_t idx = 0; idx < traj.states.size(); idx += stride) {
      const bft::Coefficients& cf = traj.states[idx];
      const Gaussian2D g = bft::density(cf, p, cf.t);
      const auto [gx, gy] = grid::grids_for(g, 96);
      w = std::max(w, std::abs(grid::GridDM2{g, gx, gy}.trace() - 1.0));
    }
    out.push_back(check("bft.integrate.trace_renormalized", w, 1e-7));
  }

  // reduced kernel coefficients against frozen values and the grid oracle
  {
    bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
    const Gaussian1D red = bft::reduced_damped(spec, 0.0);
    double w = std::abs(red.gamma_c - 0.316227766017);
    w = std::max(w, std::abs(red.gamma_delta - 2.846049894152));
    w = std::max(w, std::abs(red.gamma_mu - Complex(0.0, -0.632455532034)));

    const Gaussian2D g2 = bft::density(bft::particular_solution(spec), p, 0.0);
    const auto [gx, gy] = grid::grids_for(g2, 128);
    const grid::GridDM traced = grid::GridDM2{g2, gx, gy}.partial_trace(
        grid::Axis::y);
    const grid::ExponentFit fit = grid::fit_exponent(traced);
    w = std::max(w, std::abs(fit.gamma_c - red.gamma_c));
    w = std::max(w, std::abs(fit.gamma_delta - red.gamma_delta));
    w = std::max(w, std::abs(fit.gamma_mu - red.gamma_mu));
    out.push_back(check("bft.reduction.gamma_match", w, 1e-6));
  }

  // mirror symmetry of the two reductions
  {
    double w = 0.0;
    for (int k = 0; k < 50; ++k) {
      const bft::ParticularSpec spec = random_spec(rng);
      const double t = u(rng);
      const Gaussian1D amp = bft::reduced_amplified(spec, t);
      bft::ParticularSpec mirror = spec;
      mirror.theta = 2.0 * kPi - spec.theta;
      mirror.params.gamma = -spec.params.gamma;
      const Gaussian1D dam = bft::reduced_damped(mirror, t);
      const double scale = std::max(1.0, std::abs(amp.gamma_delta));
      w = std::max(w, std::abs(amp.gamma_c - dam.gamma_c) / scale);
      w = std::max(w, std::abs(amp.gamma_delta - dam.gamma_delta) / scale);
      w = std::max(w, std::abs(amp.gamma_mu - dam.gamma_mu) / scale);
      w = std::max(w, std::abs(amp.norm - dam.norm) / scale);
    }
    out.push_back(check("bft.reduction.mirror_symmetry", w, 1e-12));
  }

  // both subsystems decohere to the same degree; bounded by 1/2
  {
    double w = 0.0, bound = 0.0;
    for (int k = 0; k < 50; ++k) {
      const bft::ParticularSpec spec = random_spec(rng, 8.0);
      const double t = 2.0 * u(rng);
      const double qd_damped = delta_qd(bft::reduced_damped(spec, t));
      const double qd_amp = delta_qd(bft::reduced_amplified(spec, t));
      w = std::max(w, std::abs(qd_damped - qd_amp));
      bound = std::max(bound, qd_damped - 0.5);
    }
    out.push_back(check("bft.reduction.same_delta_qd", w, 1e-12));
    out.push_back(check("bft.delta_qd.bound", bound, 1e-15));
  }

  // grid partial trace matches the analytic reduction pointwise
  {
    bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
    const Gaussian2D g2 = bft::density(bft::particular_solution(spec), p, 0.0);
    const auto [gx, gy] = grid::grids_for(g2, 128);
    const grid::GridDM2 lazy{g2, gx, gy};
    const Gaussian1D red = bft::reduced_damped(spec, 0.0);
    const grid::GridDM traced = lazy.partial_trace(grid::Axis::y);
    double rel = 0.0;
    const double vmax = red.norm;
    for (int i = 0; i < gx.n; ++i) {
      for (int j = 0; j < gx.n; ++j) {
        const Complex ana = evaluate1d(red, gx.point(i), gx.point(j));
        if (std::abs(ana) > 1e-8 * vmax) {
          rel = std::max(rel, std::abs(traced.values(i, j) - ana) / std::abs(ana));
        }
      }
    }
    out.push_back(check("bft.grid.partial_trace", rel, 1e-5));
    out.push_back(check("bft.grid.trace2d", std::abs(lazy.trace() - 1.0), 1e-6));
  }

  // RK4 convergence order under step halving
  {
    bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
    bft::Coefficients cf0 = bft::particular_solution(spec);
    cf0.c += Complex(0.0, 0.2);
    auto final_state = [&](double dt) {
      return bft::integrate(cf0, p, 1.0, dt).states.back();
    };
    const bft::Coefficients ref = final_state(1.0 / 4096.0);
    auto err = [&](double dt) {
      const bft::Coefficients s = final_state(dt);
      double e = std::abs(s.a - ref.a);
      e = std::max(e, std::abs(s.a1 - ref.a1));
      e = std::max(e, std::abs(s.b - ref.b));
      e = std::max(e, std::abs(s.b1 - ref.b1));
      e = std::max(e, std::abs(s.c - ref.c));
      e = std::max(e, std::abs(s.d - ref.d));
      return e;
    };
    const double e1 = err(0.05), e2 = err(0.025), e3 = err(0.0125);
    const double order = 0.5 * (std::log2(e1 / e2) + std::log2(e2 / e3));
    out.push_back(check("bft.rk4.order", std::abs(order - 4.0), 0.2,
                        "observed order " + fmt(order)));
  }

  // evolution-equation residual on the grid
  {
    bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
    const bft::Coefficients cf = bft::particular_solution(spec);
    const double r1 =
        grid::lvn_residual(cf, p, 0.0, grid::lvn_grid(cf, p, 0.0, 0.05));
    const double r2 =
        grid::lvn_residual(cf, p, 0.0, grid::lvn_grid(cf, p, 0.0, 0.025));
    out.push_back(check("bft.lvn.residual", r1, 1e-4));
    out.push_back(check("bft.lvn.order", std::abs(r1 / r2 - 4.0), 0.8,
                        "h-halving ratio " + fmt(r1 / r2)));
    bft::Coefficients bad = cf;
    bad.a += 0.1;
    const double rbad =
        grid::lvn_residual(bad, p, 0.0, grid::lvn_grid(bad, p, 0.0, 0.05));
    out.push_back(check("bft.lvn.sensitivity", 50.0 * r1 / rbad, 1.0,
                        "corrupted/floor ratio " + fmt(rbad / r1)));
  }

  {
    bft::ParticularSpec spec{2.0, 3.0 * kPi / 4.0, p};
    const bft::Classicality c = bft::classicality_check(spec);
    out.push_back(note(
        "closed_form_note.delta_qd",
        "definition-based = " + fmt(c.delta_qd) + ", closed-form variant = " +
            fmt(c.delta_qd_closed) +
            " (closed form lacks the cos^2 theta factor in the numerator)"));
    out.push_back(note(
        "closed_form_note.delta_cc",
        "definition-based (t=0) = " + fmt(c.delta_cc) +
            ", closed-form variant = " + fmt(c.delta_cc_closed) +
            " (closed form lacks the e^{gamma t/m} growth factor)"));
  }
  return out;
}

std::vector<CheckResult> suite_amplified() {
  std::vector<CheckResult> out;
  std::mt19937 rng(53);
  OscillatorParams p;
  p.gamma = 1.0;

  // v equals the closed form and mirrors the damped mode under gamma -> -gamma
  {
    const double Om = ck::omega_reduced(p);
    double w = 0.0, mir = 0.0, wrons = 0.0, eom = 0.0;
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
      const ModeFunction v = amplified::v_mode(p, t);
      const Complex closed =
          std::polar(std::exp(p.gamma * t / (2.0 * p.m)) /
                         std::sqrt(2.0 * p.hbar * p.m * Om),
                     -Om * t);
      w = std::max(w, std::abs(v.u - closed));
      OscillatorParams neg = p;
      neg.gamma = -p.gamma;
      mir = std::max(mir, std::abs(v.u - ck::mode_function(neg, t).u));
      mir = std::max(mir, std::abs(v.u_dot - ck::mode_function(neg, t).u_dot));
      wrons = std::max(wrons,
                       std::abs(amplified::wronskian(p, v) - Complex(0, 1)));
      eom = std::max(eom, amplified::eom_residual(p, t));
    }
    out.push_back(check("amplified.mode.closed_form", w, 1e-14));
    out.push_back(check("amplified.mode.mirror", mir, 1e-14));
    out.push_back(check("amplified.wronskian", wrons, 1e-12));
    out.push_back(check("amplified.mode.eom_residual", eom, 1e-6));
  }

  // measures: delta_qd = 1/2 always, delta_cc decays as e^{-gamma t/m}
  {
    double dqd = 0.0, law = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int i = 0; i <= 20; ++i) {
      const double t = 0.25 * i;
      const amplified::Measures ms = amplified::measures(p, t);
      dqd = std::max(dqd, std::abs(ms.delta_qd - 0.5));
      const double expected = ck::omega_reduced(p) * ck::omega_reduced(p) *
                              p.m * p.m * std::exp(-p.gamma * t / p.m) /
                              (p.hbar * p.gamma);
      law = std::max(law, std::abs(ms.delta_cc - expected) / expected);
      if (ms.delta_cc >= prev) monotone = false;
      prev = ms.delta_cc;
    }
    out.push_back(check("amplified.delta_qd.half", dqd, 1e-15));
    out.push_back(check("amplified.delta_cc.law", law, 1e-12));
    out.push_back(check("amplified.delta_cc.monotone", monotone ? 0.0 : 1.0, 0.5));
  }

  // dispersion growth and wave-function normalization
  {
    const double t = 2.0;
    const double ratio = amplified::dispersions(p, t).x2 /
                         amplified::dispersions(p, 0.0).x2;
    out.push_back(check("amplified.dispersion.growth",
                        std::abs(ratio - std::exp(p.gamma * t / p.m)), 1e-12));

    const Gaussian1D g = amplified::density(p, t);
    const grid::Grid1D gr = grid::grid_for(g, 512);
    double sum = 0.0;
    for (int i = 0; i < gr.n; ++i) {
      sum += gr.weight(i) * std::norm(amplified::wavefunction(p, 0, gr.point(i), t));
    }
    out.push_back(check("amplified.wavefunction.normalized",
                        std::abs(sum - 1.0), 1e-8));
  }

  // pointwise mirror of the wave function at random points
  {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    OscillatorParams neg = p;
    neg.gamma = -p.gamma;
    double w = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double y = u(rng);
      const double t = std::abs(u(rng));
      w = std::max(w, std::abs(amplified::wavefunction(p, 0, y, t) -
                               ck::wavefunction(neg, 0, y, t)));
    }
    out.push_back(check("amplified.wavefunction.mirror", w, 1e-14));
  }
  return out;
}

std::vector<CheckResult> suite_coupled() {
  std::vector<CheckResult> out;

  // bound over the validity region
  {
    double over = 0.0;
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        const double w1 = 0.5 + 1.5 * i / 49.0;
        const double w2 = 0.5 + 1.5 * j / 49.0;
        for (int k = 0; k < 20; ++k) {
          const double lam = (2.0 * k / 19.0 - 1.0) * 0.95 * w1 * w2;
          const double d =
              coupled::coupled_delta_qd({1.0, w1, w2, lam});
          over = std::max(over, d - 0.5);
        }
      }
    }
    out.push_back(check("coupled.delta_qd.bound", over, 1e-15));
  }

  // exact 1/2 at zero coupling, both frequency orderings
  {
    const double a = coupled::coupled_delta_qd({1.0, 1.0, 2.0, 0.0});
    const double b = coupled::coupled_delta_qd({1.0, 2.0, 1.0, 0.0});
    out.push_back(check("coupled.delta_qd.lambda_zero",
                        std::max(std::abs(a - 0.5), std::abs(b - 0.5)), 1e-15));
  }

  // infinite classical correlation everywhere in the validity region
  {
    bool all_inf = true;
    for (double f : {0.0, 0.4, 0.9})
      for (double w2 : {0.7, 1.0, 1.6}) {
        const Gaussian1D g = coupled::to_gaussian(
            coupled::coupled_reduced({1.0, 1.0, w2, f * w2}));
        if (!std::isinf(delta_cc(g))) all_inf = false;
      }
    out.push_back(check("coupled.delta_cc.infinite", all_inf ? 0.0 : 1.0, 0.5));
  }

  // the two delta_qd computation paths agree; grid purity closes the loop
  {
    const coupled::CoupledParams p{1.0, 1.0, 1.3, 0.6};
    const double direct = coupled::coupled_delta_qd(p);
    const Gaussian1D g = coupled::to_gaussian(coupled::coupled_reduced(p));
    out.push_back(check("coupled.delta_qd.consistency",
                        std::abs(direct - delta_qd(g)), 1e-12));
    const grid::GridDM dm = grid::discretize1d(g, grid::grid_for(g, 256));
    out.push_back(check("coupled.purity.grid",
                        std::abs(dm.purity() - 2.0 * direct), 1e-6));
  }

  // continuity: delta_qd -> 1/2 as lambda -> 0
  {
    double defect = 0.0;
    double prev = 0.0;
    bool monotone = true;
    for (double lam : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
      const double d = coupled::coupled_delta_qd({1.0, 1.0, 2.0, lam});
      if (d < prev) monotone = false;
      prev = d;
      defect = d;  // last one, lambda = 1e-6
    }
    out.push_back(check("coupled.delta_qd.continuity",
                        std::abs(defect - 0.5) + (monotone ? 0.0 : 1.0), 1e-9));
  }
  return out;
}

std::vector<CheckResult> suite(const std::string& name) {
  if (name == "ck") return suite_ck();
  if (name == "bft") return suite_bft();
  if (name == "amplified") return suite_amplified();
  if (name == "coupled") return suite_coupled();
  if (name == "all") {
    std::vector<CheckResult> out = suite_gaussian();
    for (auto&& s : {suite_ck(), suite_bft(), suite_amplified(), suite_coupled()}) {
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }
  throw ConfigError("unknown verify suite: " + name +
                    " (expected ck|bft|amplified|coupled|all)");
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.informational && !r.pass) return false;
  }
  return true;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& r : results) {
    if (r.informational) {
      os << "[INFO] " << r.name << ": " << r.detail << "\n";
      continue;
    }
    if (!r.pass) ++failed;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "defect=%.3e tol=%.0e", r.defect, r.tol);
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " " << buf;
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
  }
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
     << "\n";
  return os.str();
}

}  // namespace qdo::verify
