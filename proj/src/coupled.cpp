#include "qdo/coupled.hpp"

#include <cmath>
#include <stdexcept>

#include "qdo/errors.hpp"

namespace qdo::coupled {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const CoupledParams& p) {
  if (!(p.m > 0.0) || !(p.omega1 > 0.0) || !(p.omega2 > 0.0) ||
      !std::isfinite(p.lambda)) {
    throw std::invalid_argument("coupled parameters: need m, omega1, omega2 > 0");
  }
}

}  // namespace

Mixing mixing(const CoupledParams& p) {
  validate(p);
  const double disc = p.m * p.m * p.omega1 * p.omega1 * p.omega2 * p.omega2 -
                      p.lambda * p.lambda;
  if (!(disc > 0.0)) {
    throw std::domain_error(
        "coupling too strong: need m^2 w1^2 w2^2 - lambda^2 > 0");
  }
  const double adj = p.m * (p.omega2 * p.omega2 - p.omega1 * p.omega1);
  const double opp = 2.0 * p.lambda;
  const double hyp = std::hypot(adj, opp);

  Mixing mix;
  const double e_eta =
      (p.m * (p.omega1 * p.omega1 + p.omega2 * p.omega2) + hyp) /
      (2.0 * std::sqrt(disc));
  mix.eta = std::log(e_eta);
  mix.vartheta = 0.5 * std::atan2(opp, adj);
  if (hyp > 0.0) {
    mix.cos_2vartheta = adj / hyp;
    mix.sin_2vartheta = opp / hyp;
  } else {
    // w1 = w2 and lambda = 0: no mixing, angle conventionally zero.
    mix.cos_2vartheta = 1.0;
    mix.sin_2vartheta = 0.0;
  }
  return mix;
}

MixedReduced coupled_reduced(const CoupledParams& p) {
  const Mixing mix = mixing(p);
  const double sh = std::sinh(mix.eta);
  const double ch = std::cosh(mix.eta);
  MixedReduced r;
  r.width_d = ch - sh * mix.cos_2vartheta;
  // cosh^2 - sinh^2 cos^2 rewritten so the value is exactly 1 at zero mixing
  // and never dips below 1 to rounding.
  r.gamma_delta_mix = 1.0 + sh * sh * mix.sin_2vartheta * mix.sin_2vartheta;
  r.eta = mix.eta;
  r.vartheta = mix.vartheta;
  return r;
}

Gaussian1D to_gaussian(const MixedReduced& r) {
  Gaussian1D g;
  g.norm = 1.0 / std::sqrt(kPi * r.width_d);
  g.gamma_c = 1.0 / r.width_d;
  g.gamma_delta = r.gamma_delta_mix / r.width_d;
  g.gamma_mu = Complex(0.0, 0.0);
  return g;
}

double delta_qd_from_mixing(const Mixing& mix) {
  const double sh = std::sinh(mix.eta);
  return 1.0 /
         (2.0 * std::sqrt(1.0 + sh * sh * mix.sin_2vartheta * mix.sin_2vartheta));
}

double coupled_delta_qd(const CoupledParams& p) {
  return delta_qd_from_mixing(mixing(p));
}

}  // namespace qdo::coupled
