#include "qdo/gaussian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qdo/errors.hpp"

namespace qdo {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_finite(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("non-finite coordinate input");
    }
  }
}

// Diagonal quadratic form of a two-mode kernel:
//   rho(x,y,x,y) = norm * exp(-ax*x^2 - ay*y^2 - cxy*x*y)
struct DiagonalForm {
  Complex ax, ay, cxy;
};

DiagonalForm diagonal_form(const Gaussian2D& g) {
  const double ep = std::exp(g.damping_exponent);
  const double em = std::exp(-g.damping_exponent);
  return {ep * (g.a + std::conj(g.a) + g.a1),
          em * (g.b + std::conj(g.b) + g.b1),
          2.0 * g.c + g.d + std::conj(g.d)};
}

}  // namespace

Complex evaluate1d(const Gaussian1D& g, double x_prime, double x) {
  require_finite({x_prime, x});
  const double xc = 0.5 * (x_prime + x);
  const double xd = 0.5 * (x_prime - x);
  const Complex expo = -g.gamma_c * xc * xc - g.gamma_delta * xd * xd -
                       g.gamma_mu * (xc * xd);
  return g.norm * std::exp(expo);
}

double trace1d(const Gaussian1D& g) {
  if (!(g.gamma_c > 0.0)) {
    throw NormalizabilityError("trace1d: gamma_c <= 0, kernel not normalizable");
  }
  return g.norm * std::sqrt(kPi / g.gamma_c);
}

double purity1d(const Gaussian1D& g) {
  const double tr = trace1d(g);
  if (std::abs(tr - 1.0) > 1e-10) {
    throw std::invalid_argument("purity1d: kernel is not normalized");
  }
  if (!(g.gamma_delta > 0.0)) {
    throw NormalizabilityError("purity1d: gamma_delta <= 0");
  }
  return g.norm * g.norm * kPi / std::sqrt(g.gamma_c * g.gamma_delta);
}

double delta_qd(const Gaussian1D& g) {
  if (!(g.gamma_delta > 0.0)) {
    throw NormalizabilityError("delta_qd: gamma_delta <= 0");
  }
  if (!(g.gamma_c > 0.0)) {
    throw NormalizabilityError("delta_qd: gamma_c <= 0");
  }
  return 0.5 * std::sqrt(g.gamma_c / g.gamma_delta);
}

double delta_cc(const Gaussian1D& g) {
  const double mu = std::abs(g.gamma_mu);
  if (mu == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return g.gamma_c * g.gamma_delta / mu;
}

bool physical1d(const Gaussian1D& g) {
  return g.gamma_c <= g.gamma_delta * (1.0 + 1e-12);
}

Complex evaluate2d(const Gaussian2D& g, double x_prime, double y_prime,
                   double x, double y) {
  require_finite({x_prime, y_prime, x, y});
  const double ep = std::exp(g.damping_exponent);
  const double em = std::exp(-g.damping_exponent);
  const Complex expo =
      -ep * (std::conj(g.a) * x_prime * x_prime + g.a1 * x_prime * x +
             g.a * x * x) -
      em * (std::conj(g.b) * y_prime * y_prime + g.b1 * y_prime * y +
            g.b * y * y) -
      g.c * (x_prime * y_prime + x * y) - g.d * x_prime * y -
      std::conj(g.d) * x * y_prime;
  return g.norm * std::exp(expo);
}

bool normalizable2d(const Gaussian2D& g) {
  const DiagonalForm f = diagonal_form(g);
  const double ax = f.ax.real();
  const double ay = f.ay.real();
  const double cr = f.cxy.real();
  return ax > 0.0 && ax * ay - 0.25 * cr * cr > 0.0;
}

double trace2d(const Gaussian2D& g) {
  if (!normalizable2d(g)) {
    throw NormalizabilityError(
        "trace2d: diagonal quadratic form is not positive definite");
  }
  const DiagonalForm f = diagonal_form(g);
  const Complex det = f.ax * f.ay - 0.25 * f.cxy * f.cxy;
  const Complex tr = g.norm * kPi / std::sqrt(det);
  return tr.real();
}

namespace {

// Common core of the two reductions.  After pinning the traced pair to its
// diagonal the integrand is exp(-beta s^2 - L s) with L linear in the kept
// coordinates; completing the square yields a one-mode Gaussian kernel with
//   exponent = -kept_exp_factor * (P u'^2 + Q u^2 + S u'u).
// The square-completion term is divided by kept_exp_factor so that P, Q, S
// live inside the kept block's e-factor.
Gaussian1D reduce_core(double parent_norm, Complex beta, Complex kept_block_p,
                       Complex kept_block_q, Complex kept_block_s,
                       Complex lin_prime, Complex lin_plain,
                       double kept_exp_factor) {
  if (!(beta.real() > 0.0)) {
    throw NormalizabilityError("partial trace: traced-mode integral diverges");
  }
  const Complex inv4b = 1.0 / (4.0 * beta * kept_exp_factor);
  const Complex P = kept_block_p - lin_prime * lin_prime * inv4b;
  const Complex Q = kept_block_q - lin_plain * lin_plain * inv4b;
  const Complex S = kept_block_s - lin_prime * lin_plain * (2.0 * inv4b);

  // x'^2, x^2, x'x  ->  xc^2, xd^2, xc*xd
  const Complex gc = kept_exp_factor * (P + Q + S);
  const Complex gd = kept_exp_factor * (P + Q - S);
  const Complex gm = kept_exp_factor * 2.0 * (P - Q);

  const Complex scale = std::sqrt(kPi / beta);
  Gaussian1D out;
  out.norm = parent_norm * scale.real();
  out.gamma_c = gc.real();
  out.gamma_delta = gd.real();
  out.gamma_mu = gm;
  return out;
}

}  // namespace

Gaussian1D reduce_over_y(const Gaussian2D& g) {
  const double ep = std::exp(g.damping_exponent);
  const double em = std::exp(-g.damping_exponent);
  // y' = y collapses the y block to e^{-E}(B + B* + B1) y^2 and the
  // couplings to [(C + D)x' + (C + D*)x] y.  The kept x block carries e^{+E}.
  const Complex beta = em * (g.b + std::conj(g.b) + g.b1);
  return reduce_core(g.norm, beta, std::conj(g.a), g.a, g.a1, g.c + g.d,
                     g.c + std::conj(g.d), ep);
}

Gaussian1D reduce_over_x(const Gaussian2D& g) {
  const double ep = std::exp(g.damping_exponent);
  const double em = std::exp(-g.damping_exponent);
  // x' = x collapses the x block to e^{+E}(A + A* + A1) x^2 and the
  // couplings to [(C + D*)y' + (C + D)y] x.  The kept y block carries e^{-E}.
  const Complex beta = ep * (g.a + std::conj(g.a) + g.a1);
  return reduce_core(g.norm, beta, std::conj(g.b), g.b, g.b1,
                     g.c + std::conj(g.d), g.c + g.d, em);
}

}  // namespace qdo
