#pragma once

#include <complex>

namespace qdo {

using Complex = std::complex<double>;

/// One-mode Gaussian density kernel in midpoint/offset coordinates,
///
///   rho(x', x) = norm * exp(-gamma_c*xc^2 - gamma_delta*xd^2 - gamma_mu*xc*xd),
///   xc = (x' + x)/2,  xd = (x' - x)/2.
///
/// xc spans the diagonal of the kernel, xd the off-diagonal direction, so
/// gamma_delta controls how fast coherences decay away from the diagonal.
/// Hermitian kernels have real gamma_c, gamma_delta and purely imaginary
/// gamma_mu; normalizable ones have gamma_c > 0 and gamma_delta > 0, and
/// physical ones (purity <= 1) additionally gamma_c <= gamma_delta.
struct Gaussian1D {
  double norm = 1.0;
  double gamma_c = 1.0;
  double gamma_delta = 1.0;
  Complex gamma_mu{0.0, 0.0};
};

/// Two-mode Gaussian density kernel,
///
///   rho(x',y',x,y) = norm * exp[ -e^{+E} (A* x'^2 + A1 x'x + A x^2)
///                                -e^{-E} (B* y'^2 + B1 y'y + B y^2)
///                                -C (x'y' + xy) - D x'y - D* xy' ],
///
/// with E = damping_exponent.  The x block carries e^{+E}, the y block
/// e^{-E}.  Hermiticity of the kernel requires a1, b1 and c real.
struct Gaussian2D {
  double norm = 1.0;
  Complex a{0.0, 0.0};
  Complex a1{0.0, 0.0};
  Complex b{0.0, 0.0};
  Complex b1{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{0.0, 0.0};
  double damping_exponent = 0.0;
};

/// Kernel value rho(x', x).  Throws std::invalid_argument on non-finite input.
Complex evaluate1d(const Gaussian1D& g, double x_prime, double x);

/// Closed-form trace: norm * sqrt(pi / gamma_c).
/// Throws NormalizabilityError when gamma_c <= 0.
double trace1d(const Gaussian1D& g);

/// Tr rho^2 = norm^2 * pi / sqrt(gamma_c * gamma_delta); equals
/// sqrt(gamma_c/gamma_delta) for a normalized kernel.  Requires
/// trace1d(g) = 1 within 1e-10 (std::invalid_argument otherwise).
double purity1d(const Gaussian1D& g);

/// Decoherence measure (1/2)*sqrt(gamma_c/gamma_delta).  Equals 1/2 for a
/// pure state; values well below 1/2 mean decohered.  Normalization-free.
double delta_qd(const Gaussian1D& g);

/// Classical-correlation measure gamma_c*gamma_delta/|gamma_mu|.
/// Returns +infinity when gamma_mu == 0 (no position-momentum correlation);
/// the infinite value is meaningful output, not an error.
double delta_cc(const Gaussian1D& g);

/// True when gamma_c <= gamma_delta (purity <= 1).  Violations are flagged
/// by callers, not rejected: transient states from exploratory integration
/// may cross the boundary.
bool physical1d(const Gaussian1D& g);

/// Kernel value rho(x', y', x, y).  Throws std::invalid_argument on
/// non-finite input.
Complex evaluate2d(const Gaussian2D& g, double x_prime, double y_prime,
                   double x, double y);

/// Closed-form two-mode trace of the diagonal.  Independent of
/// damping_exponent (the e^{+E} and e^{-E} factors cancel).  Throws
/// NormalizabilityError when the real part of the diagonal quadratic form
/// is not positive definite.  Imaginary residues (non-Hermitian kernels
/// from exploratory coefficient sets) are discarded.
double trace2d(const Gaussian2D& g);

/// True when the real part of the diagonal quadratic form is positive
/// definite, i.e. the trace integral converges.
bool normalizable2d(const Gaussian2D& g);

/// Sets y' = y and integrates over y by exact completion of squares.
/// The result keeps the parent normalization: trace1d of the output equals
/// trace2d of the input.  Throws NormalizabilityError when the y integral
/// diverges.
Gaussian1D reduce_over_y(const Gaussian2D& g);

/// Mirror of reduce_over_y: sets x' = x and integrates over x.
Gaussian1D reduce_over_x(const Gaussian2D& g);

}  // namespace qdo
