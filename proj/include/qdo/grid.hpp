#pragma once

#include <Eigen/Dense>
#include <utility>

#include "qdo/bft.hpp"
#include "qdo/gaussian.hpp"

namespace qdo::grid {

/// Uniform coordinate grid with trapezoidal quadrature weights.
struct Grid1D {
  double x_min = -8.0;
  double x_max = 8.0;
  int n = 256;

  double dx() const { return (x_max - x_min) / (n - 1); }
  double point(int i) const { return x_min + i * dx(); }
  double weight(int i) const {
    return (i == 0 || i == n - 1) ? 0.5 * dx() : dx();
  }
};

/// Grid sized to cover k_sigma standard deviations of the kernel in both the
/// diagonal and off-diagonal directions.
Grid1D grid_for(const Gaussian1D& g, int n, double k_sigma = 8.0);

/// Per-axis grids for a two-mode kernel, sized from the diagonal marginals
/// plus the off-diagonal decay scale of each block.
std::pair<Grid1D, Grid1D> grids_for(const Gaussian2D& g, int n,
                                    double k_sigma = 8.0);

/// Dense one-mode kernel samples rho(x_i, x_j) with quadrature metadata.
/// Everything here is brute force on purpose: grid results are the oracle
/// the closed forms are checked against.
struct GridDM {
  Eigen::MatrixXcd values;
  Grid1D grid;
  bool coverage_warning = false;

  double trace() const;
  double purity() const;
  double hermiticity_defect() const;
};

GridDM discretize1d(const Gaussian1D& g, const Grid1D& grid);

enum class Axis { x, y };

/// Lazily discretized two-mode kernel.  Values are evaluated on demand; the
/// full (nx*ny)^2 matrix is materialized only by dense(), which refuses
/// products nx*ny > 4096 (a dense two-mode kernel at production grid sizes
/// does not fit in memory).
struct GridDM2 {
  Gaussian2D state;
  Grid1D gx, gy;

  Complex value(int i, int j, int k, int l) const;
  double trace() const;
  GridDM partial_trace(Axis over) const;
  Eigen::MatrixXcd dense() const;
};

/// Eigen-decomposition of the weighted kernel W^{1/2} M W^{1/2}: physical
/// states have min_eig >= -1e-8, trace ~ 1 and purity = sum of squared
/// eigenvalues.  Throws std::invalid_argument on non-Hermitian input
/// (defect > 1e-8).
struct SpectrumInfo {
  double min_eig;
  double trace;
  double purity;
};

SpectrumInfo spectrum_check(const GridDM& dm);
SpectrumInfo spectrum_check2(const GridDM2& dm);

/// Least-squares fit of log(values) to the quadratic exponent model; used to
/// recover gamma_c / gamma_delta / gamma_mu / norm from gridded kernels.
/// Only points with |value| >= rel_floor * max|value| enter the fit.  The
/// fit takes the principal branch of the log, so the kernel phase must stay
/// below pi over the fitted region; callers shrink the region via rel_floor
/// when gamma_mu is large.
struct ExponentFit {
  double gamma_c;
  double gamma_delta;
  Complex gamma_mu;
  double norm;
};

ExponentFit fit_exponent(const GridDM& dm, double rel_floor = 0.02);

/// Max-norm finite-difference residual of the coordinate-space evolution
/// equation
///   i hbar d rho/dt = [-(hbar^2/m)(d2/dx'dy' - d2/dxdy)
///                      + i (hbar gamma/2m)(x' dx' - y' dy' + x dx - y dy)
///                      + m Omega^2 (x'y' - xy)] rho
/// for the kernel built from cf at time t.  The time derivative is analytic
/// (coefficient rates from ode_rhs plus the damping-exponent drift); the
/// coordinate derivatives are central differences with step h = grid.dx().
/// Sampled on a fixed 5^4 lattice spanning the central +-1/32 of the grid
/// extent, where the quadrature of truncation terms is meaningful: the
/// residual vanishes as O(h^2) for exact solutions and jumps by orders of
/// magnitude for corrupted coefficient sets.
double lvn_residual(const bft::Coefficients& cf, const OscillatorParams& p,
                    double t, const Grid1D& grid);

/// Grid for lvn_residual: spans 8 decay lengths of the kernel's x block
/// with spacing as close to h as the uniform grid allows.
Grid1D lvn_grid(const bft::Coefficients& cf, const OscillatorParams& p,
                double t, double h);

}  // namespace qdo::grid
