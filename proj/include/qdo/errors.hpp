#pragma once

#include <stdexcept>
#include <string>

namespace qdo {

/// Parameters outside the regime a closed form is valid in
/// (e.g. critically damped or overdamped oscillator input).
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

/// A Gaussian kernel whose defining integrals do not converge.
class NormalizabilityError : public std::runtime_error {
 public:
  explicit NormalizabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// ODE integration left the representable range (|coefficient| > 1e12).
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double t_last)
      : std::runtime_error(what), t_last(t_last) {}
  double t_last;  // time of the last valid state
};

/// Invalid run configuration (CLI or config file).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdo
