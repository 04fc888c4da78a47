#include "fluxcnot/pulse.hpp"

#include <cmath>
#include <numbers>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

namespace {

// Offset-subtracted unit Gaussian of width sigma centred at `center`,
// vanishing at center -/+ half_width.
double shifted_gaussian(double t, double center, double half_width, double sigma) {
  const double offset = std::exp(-half_width * half_width / (2.0 * sigma * sigma));
  const double x = t - center;
  return (std::exp(-x * x / (2.0 * sigma * sigma)) - offset) / (1.0 - offset);
}

// Integral of shifted_gaussian over [center - a, center + b] for a, b <= half_width.
double shifted_gaussian_area(double a, double b, double half_width, double sigma) {
  const double offset = std::exp(-half_width * half_width / (2.0 * sigma * sigma));
  const double s2 = std::numbers::sqrt2 * sigma;
  const double gauss = 0.5 * std::sqrt(std::numbers::pi) * s2 * (std::erf(a / s2) + std::erf(b / s2));
  return (gauss - offset * (a + b)) / (1.0 - offset);
}

}  // namespace

const char* to_string(EnvelopeKind kind) noexcept {
  return kind == EnvelopeKind::gaussian ? "gaussian" : "flat_top";
}

EnvelopeKind envelope_kind_from_string(const std::string& name) {
  if (name == "gaussian") return EnvelopeKind::gaussian;
  if (name == "flat_top") return EnvelopeKind::flat_top;
  throw Error(ErrorKind::parse, "unknown envelope kind '" + name + "'");
}

void PulseSpec::validate() const {
  if (!(t_gate > 0.0)) throw Error(ErrorKind::parameter, "pulse: t_gate must be positive");
  if (!(dt > 0.0) || dt > t_gate) throw Error(ErrorKind::parameter, "pulse: dt must lie in (0, t_gate]");
  if (!std::isfinite(omega_d) || !std::isfinite(f_peak) || !std::isfinite(eta)) {
    throw Error(ErrorKind::parameter, "pulse: omega_d, f_peak and eta must be finite");
  }
  if (envelope_kind == EnvelopeKind::flat_top && 4.0 * effective_sigma() > t_gate + 1e-12) {
    throw Error(ErrorKind::parameter, "pulse: flat-top ramps (4 sigma) exceed t_gate");
  }
}

double envelope(const PulseSpec& pulse, double t) {
  if (t <= 0.0 || t >= pulse.t_gate) return 0.0;
  const double sigma = pulse.effective_sigma();
  if (pulse.envelope_kind == EnvelopeKind::gaussian) {
    const double half = 0.5 * pulse.t_gate;
    return pulse.f_peak * shifted_gaussian(t, half, half, sigma);
  }
  const double ramp = 2.0 * sigma;
  if (t < ramp) return pulse.f_peak * shifted_gaussian(t, ramp, ramp, sigma);
  if (t > pulse.t_gate - ramp) {
    return pulse.f_peak * shifted_gaussian(t, pulse.t_gate - ramp, ramp, sigma);
  }
  return pulse.f_peak;
}

double envelope_area(const PulseSpec& pulse) {
  const double sigma = pulse.effective_sigma();
  if (pulse.envelope_kind == EnvelopeKind::gaussian) {
    const double half = 0.5 * pulse.t_gate;
    return shifted_gaussian_area(half, half, half, sigma);
  }
  const double ramp = 2.0 * sigma;
  return 2.0 * shifted_gaussian_area(ramp, 0.0, ramp, sigma) + (pulse.t_gate - 2.0 * ramp);
}

double area_rescaling_factor(const PulseSpec& pulse) { return pulse.t_gate / envelope_area(pulse); }

}  // namespace fluxcnot
