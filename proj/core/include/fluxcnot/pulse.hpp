#pragma once

#include <string>

namespace fluxcnot {

enum class EnvelopeKind { gaussian, flat_top };

const char* to_string(EnvelopeKind kind) noexcept;
EnvelopeKind envelope_kind_from_string(const std::string& name);

/// Two-tone drive 2 f(t) cos(w_d t) (n_A + eta n_B). Frequencies and the
/// amplitude are ordinary frequencies in GHz, times in ns.
struct PulseSpec {
  double omega_d = 0.0;
  double f_peak = 0.0;
  double eta = 0.0;
  double t_gate = 50.0;
  /// Gaussian width; values <= 0 select the default t_gate / 4.
  double sigma = 0.0;
  EnvelopeKind envelope_kind = EnvelopeKind::gaussian;
  double dt = 1e-3;

  double effective_sigma() const { return sigma > 0.0 ? sigma : t_gate / 4.0; }
  /// Throws Error(parameter) for non-positive t_gate/dt or a flat-top pulse
  /// whose ramps (2 sigma each) do not fit inside t_gate.
  void validate() const;
};

/// Envelope value f(t) in GHz. The Gaussian kind is offset-subtracted so it
/// vanishes at 0 and t_gate and peaks at f_peak at t_gate / 2. The flat-top
/// kind uses the same offset-subtracted Gaussian ramps of width sigma over
/// [0, 2 sigma] and [t_gate - 2 sigma, t_gate] with a plateau in between.
/// Outside [0, t_gate] the pulse is off.
double envelope(const PulseSpec& pulse, double t);

/// Closed-form integral of envelope(t) / f_peak over [0, t_gate] in ns.
double envelope_area(const PulseSpec& pulse);

/// t_gate / envelope_area: the factor converting a constant amplitude into
/// the peak amplitude that delivers the same pulse area.
double area_rescaling_factor(const PulseSpec& pulse);

}  // namespace fluxcnot
