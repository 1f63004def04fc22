#include "qdo/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "qdo/errors.hpp"

namespace qdo::grid {

namespace {

double kernel_widths_1d(const Gaussian1D& g) {
  // Support envelope: |x| <= k*(sigma_c + sigma_delta) covers the kernel in
  // both the diagonal and off-diagonal directions.
  return 1.0 / std::sqrt(2.0 * g.gamma_c) + 1.0 / std::sqrt(2.0 * g.gamma_delta);
}

}  // namespace

Grid1D grid_for(const Gaussian1D& g, int n, double k_sigma) {
  if (!(g.gamma_c > 0.0) || !(g.gamma_delta > 0.0)) {
    throw NormalizabilityError("grid_for: kernel not normalizable");
  }
  const double half = k_sigma * kernel_widths_1d(g);
  return Grid1D{-half, half, n};
}

std::pair<Grid1D, Grid1D> grids_for(const Gaussian2D& g, int n,
                                    double k_sigma) {
  const double ep = std::exp(g.damping_exponent);
  const double em = std::exp(-g.damping_exponent);
  const double qx = (ep * (g.a + std::conj(g.a) + g.a1)).real();
  const double qy = (em * (g.b + std::conj(g.b) + g.b1)).real();
  const double qc = (2.0 * g.c + g.d + std::conj(g.d)).real();
  const double det = qx * qy - 0.25 * qc * qc;
  if (!(qx > 0.0) || !(det > 0.0)) {
    throw NormalizabilityError("grids_for: kernel not normalizable");
  }
  // Marginal sigmas of the diagonal plus the off-diagonal decay scale of
  // each block.
  const double sx = std::sqrt(qy / (2.0 * det)) + 1.0 / std::sqrt(2.0 * qx);
  const double sy = std::sqrt(qx / (2.0 * det)) + 1.0 / std::sqrt(2.0 * qy);
  return {Grid1D{-k_sigma * sx, k_sigma * sx, n},
          Grid1D{-k_sigma * sy, k_sigma * sy, n}};
}

double GridDM::trace() const {
  double tr = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    tr += grid.weight(i) * values(i, i).real();
  }
  return tr;
}

double GridDM::purity() const {
  // Tr rho^2 = sum_ij w_i w_j rho_ij rho_ji
  double p = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) {
      p += grid.weight(i) * grid.weight(j) * (values(i, j) * values(j, i)).real();
    }
  }
  return p;
}

double GridDM::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    for (int j = i; j < grid.n; ++j) {
      d = std::max(d, std::abs(values(i, j) - std::conj(values(j, i))));
    }
  }
  return d;
}

GridDM discretize1d(const Gaussian1D& g, const Grid1D& grid) {
  if (grid.n < 16) throw std::invalid_argument("discretize1d: n must be >= 16");
  if (!(grid.x_min < grid.x_max)) {
    throw std::invalid_argument("discretize1d: empty grid range");
  }
  GridDM dm;
  dm.grid = grid;
  dm.values.resize(grid.n, grid.n);
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) {
      dm.values(i, j) = evaluate1d(g, grid.point(i), grid.point(j));
    }
  }
  // Advisory coverage check: the diagonal should be negligible at the ends.
  const double edge = std::max(std::abs(dm.values(0, 0)),
                               std::abs(dm.values(grid.n - 1, grid.n - 1)));
  const double mid = std::abs(dm.values(grid.n / 2, grid.n / 2));
  dm.coverage_warning = edge > 1e-6 * mid;
  return dm;
}

Complex GridDM2::value(int i, int j, int k, int l) const {
  return evaluate2d(state, gx.point(i), gy.point(j), gx.point(k), gy.point(l));
}

double GridDM2::trace() const {
  double tr = 0.0;
  for (int i = 0; i < gx.n; ++i) {
    for (int j = 0; j < gy.n; ++j) {
      tr += gx.weight(i) * gy.weight(j) * value(i, j, i, j).real();
    }
  }
  return tr;
}

GridDM GridDM2::partial_trace(Axis over) const {
  GridDM out;
  if (over == Axis::y) {
    out.grid = gx;
    out.values = Eigen::MatrixXcd::Zero(gx.n, gx.n);
    for (int j = 0; j < gy.n; ++j) {
      const double w = gy.weight(j);
      const double yv = gy.point(j);
      for (int i = 0; i < gx.n; ++i) {
        for (int k = 0; k < gx.n; ++k) {
          out.values(i, k) +=
              w * evaluate2d(state, gx.point(i), yv, gx.point(k), yv);
        }
      }
    }
  } else {
    out.grid = gy;
    out.values = Eigen::MatrixXcd::Zero(gy.n, gy.n);
    for (int i = 0; i < gx.n; ++i) {
      const double w = gx.weight(i);
      const double xv = gx.point(i);
      for (int j = 0; j < gy.n; ++j) {
        for (int l = 0; l < gy.n; ++l) {
          out.values(j, l) +=
              w * evaluate2d(state, xv, gy.point(j), xv, gy.point(l));
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXcd GridDM2::dense() const {
  const long nn = static_cast<long>(gx.n) * gy.n;
  if (nn > 4096) {
    throw std::invalid_argument(
        "GridDM2::dense: nx*ny > 4096 would not fit in memory");
  }
  Eigen::MatrixXcd m(nn, nn);
  for (int i = 0; i < gx.n; ++i)
    for (int j = 0; j < gy.n; ++j)
      for (int k = 0; k < gx.n; ++k)
        for (int l = 0; l < gy.n; ++l)
          m(i * gy.n + j, k * gy.n + l) = value(i, j, k, l);
  return m;
}

namespace {

SpectrumInfo spectrum_of_weighted(const Eigen::MatrixXcd& weighted) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(weighted,
                                                     Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  SpectrumInfo info;
  info.min_eig = ev.minCoeff();
  info.trace = ev.sum();
  info.purity = ev.squaredNorm();
  return info;
}

}  // namespace

SpectrumInfo spectrum_check(const GridDM& dm) {
  if (dm.hermiticity_defect() > 1e-8) {
    throw std::invalid_argument("spectrum_check: kernel is not Hermitian");
  }
  const int n = dm.grid.n;
  Eigen::VectorXd sw(n);
  for (int i = 0; i < n; ++i) sw(i) = std::sqrt(dm.grid.weight(i));
  const Eigen::MatrixXcd weighted =
      sw.asDiagonal() * dm.values * sw.asDiagonal();
  return spectrum_of_weighted(weighted);
}

SpectrumInfo spectrum_check2(const GridDM2& dm) {
  const Eigen::MatrixXcd m = dm.dense();
  const long nn = m.rows();
  Eigen::VectorXd sw(nn);
  for (int i = 0; i < dm.gx.n; ++i)
    for (int j = 0; j < dm.gy.n; ++j)
      sw(i * dm.gy.n + j) = std::sqrt(dm.gx.weight(i) * dm.gy.weight(j));
  Eigen::MatrixXcd weighted = sw.asDiagonal() * m * sw.asDiagonal();
  // symmetrize away roundoff before the self-adjoint solve
  weighted = 0.5 * (weighted + weighted.adjoint().eval());
  return spectrum_of_weighted(weighted);
}

ExponentFit fit_exponent(const GridDM& dm, double rel_floor) {
  // log rho(x', x) = log(norm) - gc*xc^2 - gd*xd^2 - gm*xc*xd
  // Complex least squares in the unknowns (log norm, gc, gd, gm); the
  // design rows are real, so the normal equations stay well conditioned.
  const double vmax = dm.values.cwiseAbs().maxCoeff();
  Eigen::Matrix4cd ata = Eigen::Matrix4cd::Zero();
  Eigen::Vector4cd atb = Eigen::Vector4cd::Zero();
  for (int i = 0; i < dm.grid.n; ++i) {
    for (int j = 0; j < dm.grid.n; ++j) {
      const Complex v = dm.values(i, j);
      if (std::abs(v) < rel_floor * vmax) continue;
      const double xc = 0.5 * (dm.grid.point(i) + dm.grid.point(j));
      const double xd = 0.5 * (dm.grid.point(i) - dm.grid.point(j));
      Eigen::Vector4cd row;
      row << 1.0, -xc * xc, -xd * xd, -xc * xd;
      const Complex rhs = std::log(v);
      ata += row * row.adjoint();
      atb += row.conjugate() * rhs;
    }
  }
  const Eigen::Vector4cd sol = ata.ldlt().solve(atb);
  ExponentFit fit;
  fit.norm = std::exp(sol(0).real());
  fit.gamma_c = sol(1).real();
  fit.gamma_delta = sol(2).real();
  fit.gamma_mu = sol(3);
  return fit;
}

Grid1D lvn_grid(const bft::Coefficients& cf, const OscillatorParams& p,
                double t, double h) {
  const double ax =
      (std::exp(p.gamma * t / p.m) * (cf.a + std::conj(cf.a) + cf.a1)).real();
  if (!(ax > 0.0)) {
    throw NormalizabilityError("lvn_grid: kernel x block not normalizable");
  }
  const double half = 8.0 / std::sqrt(2.0 * ax);
  const int n = static_cast<int>(std::lround(2.0 * half / h)) + 1;
  return Grid1D{-half, half, std::max(n, 16)};
}

double lvn_residual(const bft::Coefficients& cf, const OscillatorParams& p,
                    double t, const Grid1D& grid) {
  const double h = grid.dx();
  const double half_extent = 0.5 * (grid.x_max - grid.x_min);
  const Gaussian2D g = bft::density(cf, p, t);
  const double ax =
      (std::exp(g.damping_exponent) * (g.a + std::conj(g.a) + g.a1)).real();
  const double decay = 1.0 / std::sqrt(2.0 * ax);
  if (!(h > 0.0) || h > 0.5 * decay || !(half_extent > 4.0 * h)) {
    throw std::invalid_argument(
        "lvn_residual: grid too coarse to resolve the kernel (truncation "
        "would dominate the residual)");
  }
  const bft::Coefficients dot = bft::ode_rhs(cf, p);
  const double Om = ck::omega_reduced(p);
  const double hb = p.hbar;
  const double grate = p.gamma / p.m;
  const double ep = std::exp(g.damping_exponent);
  const double em = std::exp(-g.damping_exponent);
  const Complex I{0.0, 1.0};

  const double step = half_extent / 64.0;
  const double offsets[5] = {-2 * step, -step, 0.0, step, 2 * step};

  double worst = 0.0;
  for (double xp : offsets)
    for (double yp : offsets)
      for (double x : offsets)
        for (double y : offsets) {
          const Complex rho = evaluate2d(g, xp, yp, x, y);
          // analytic d rho / dt: damping-exponent drift + coefficient rates
          const Complex sdot =
              -grate * ep *
                  (std::conj(g.a) * xp * xp + g.a1 * xp * x + g.a * x * x) +
              grate * em *
                  (std::conj(g.b) * yp * yp + g.b1 * yp * y + g.b * y * y) -
              ep * (std::conj(dot.a) * xp * xp + dot.a1 * xp * x +
                    dot.a * x * x) -
              em * (std::conj(dot.b) * yp * yp + dot.b1 * yp * y +
                    dot.b * y * y) -
              dot.c * (xp * yp + x * y) - dot.d * xp * y -
              std::conj(dot.d) * x * yp;
          const Complex lhs = I * hb * sdot * rho;

          auto ev = [&](double dxp, double dyp, double dx, double dy) {
            return evaluate2d(g, xp + dxp, yp + dyp, x + dx, y + dy);
          };
          const Complex cross_p = (ev(h, h, 0, 0) - ev(h, -h, 0, 0) -
                                   ev(-h, h, 0, 0) + ev(-h, -h, 0, 0)) /
                                  (4.0 * h * h);
          const Complex cross_u = (ev(0, 0, h, h) - ev(0, 0, h, -h) -
                                   ev(0, 0, -h, h) + ev(0, 0, -h, -h)) /
                                  (4.0 * h * h);
          const Complex dxp1 = (ev(h, 0, 0, 0) - ev(-h, 0, 0, 0)) / (2.0 * h);
          const Complex dyp1 = (ev(0, h, 0, 0) - ev(0, -h, 0, 0)) / (2.0 * h);
          const Complex dx1 = (ev(0, 0, h, 0) - ev(0, 0, -h, 0)) / (2.0 * h);
          const Complex dy1 = (ev(0, 0, 0, h) - ev(0, 0, 0, -h)) / (2.0 * h);

          const Complex rhs =
              -(hb * hb / p.m) * (cross_p - cross_u) +
              I * (hb * p.gamma / (2.0 * p.m)) *
                  (xp * dxp1 - yp * dyp1 + x * dx1 - y * dy1) +
              p.m * Om * Om * (xp * yp - x * y) * rho;

          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

}  // namespace qdo::grid
