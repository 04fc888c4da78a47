#pragma once

#include <numbers>

#include <Eigen/Dense>

namespace fluxcnot {

// Circuit parameters of a single fluxonium. Energies are E/h in GHz.
struct FluxoniumSpec {
  double e_c = 0.0;
  double e_l = 0.0;
  double e_j = 0.0;
  double phi_ext = std::numbers::pi;
  int basis_size = 100;

  /// Throws Error(parameter) on non-positive e_c/e_l, negative e_j or a basis
  /// smaller than 20 oscillator states.
  void validate() const;

  /// sqrt(8 E_L E_C), the level splitting of the quadratic part.
  double plasma_frequency() const;
  /// Zero-point amplitude of the charge operator, (E_L / 32 E_C)^(1/4).
  double charge_zpf() const;
  /// Zero-point amplitude of the phase operator, (2 E_C / E_L)^(1/4).
  double phase_zpf() const;
};

/// Eigen-solution of one fluxonium restricted to its lowest levels.
///
/// `energies` are ascending with the ground state at zero. `n_elements`
/// holds the real antisymmetric matrix n_kl = -i <k|n|l> in the
/// sign-fixed eigenbasis, so <k|n|l> = i * n_elements(k, l).
struct QubitSpectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXd n_elements;

  int level_count() const { return static_cast<int>(energies.size()); }
  /// Transition frequency E_l - E_k in GHz.
  double frequency(int k, int l) const { return energies(l) - energies(k); }
  double n(int k, int l) const { return n_elements(k, l); }
};

/// Fluxonium Hamiltonian in the oscillator eigenbasis of its quadratic part.
/// The phase operator is real symmetric in that basis, so the result is real
/// symmetric for any external flux.
Eigen::MatrixXd build_hamiltonian(const FluxoniumSpec& spec);

/// Matrix elements of cos(phi) and sin(phi) in the oscillator basis,
/// computed from the closed-form displacement-operator recurrence.
struct PhaseFunctions {
  Eigen::MatrixXd cos_phi;
  Eigen::MatrixXd sin_phi;
};
PhaseFunctions phase_functions(int basis_size, double phase_zpf);

/// Diagonalizes the Hamiltonian and keeps the lowest `keep` levels. Each
/// eigenvector is sign-fixed so that its first largest-magnitude component is
/// positive. Requires keep <= basis_size / 2 (Error(truncation) otherwise).
QubitSpectrum diagonalize(const FluxoniumSpec& spec, int keep);

}  // namespace fluxcnot
