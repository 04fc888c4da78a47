#include "fluxcnot/effective_rates.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "fluxcnot/errors.hpp"

namespace fluxcnot {

namespace {

using cd = std::complex<double>;

struct Elements {
  cd a_00_01, a_10_11, b_00_01, b_10_11;
};

Elements elements(const CoupledSystem& sys) {
  return {sys.matrix_element(QubitId::a, {0, 0}, {0, 1}),
          sys.matrix_element(QubitId::a, {1, 0}, {1, 1}),
          sys.matrix_element(QubitId::b, {0, 0}, {0, 1}),
          sys.matrix_element(QubitId::b, {1, 0}, {1, 1})};
}

double detuning_ab(const CoupledSystem& sys) {
  return sys.spectrum_b().frequency(0, 1) - sys.spectrum_a().frequency(0, 1);
}

}  // namespace

double eta_sd(const CoupledSystem& sys) {
  const Elements e = elements(sys);
  if (std::abs(e.b_00_01) <= 1e-8) {
    throw Error(ErrorKind::degeneracy, "effective rates: <00|n_B|01> vanishes");
  }
  return (-e.a_00_01 / e.b_00_01).real();
}

double rabi_rate_sd(const CoupledSystem& sys, double f) {
  const Elements e = elements(sys);
  if (std::abs(e.b_00_01) <= 1e-8) {
    throw Error(ErrorKind::degeneracy, "effective rates: <00|n_B|01> vanishes");
  }
  return 2.0 * f * std::abs(e.a_10_11 - e.a_00_01 * e.b_10_11 / e.b_00_01);
}

double rabi_rate_linear(const CoupledSystem& sys, double f) {
  const Elements e = elements(sys);
  return 2.0 * f * std::abs(e.a_10_11 - e.a_00_01);
}

double rabi_rate_linear_target_a(const CoupledSystem& sys, double f) {
  const cd b_01_11 = sys.matrix_element(QubitId::b, {0, 1}, {1, 1});
  const cd b_00_10 = sys.matrix_element(QubitId::b, {0, 0}, {1, 0});
  return 2.0 * f * std::abs(b_01_11 - b_00_10);
}

double pi_pulse_duration(double rabi_ghz) { return 1.0 / (2.0 * rabi_ghz); }

double lambda_from_drive(const CoupledSystem& sys, double f) {
  return 2.0 * f * std::abs(sys.spectrum_a().n(0, 1)) / detuning_ab(sys);
}

double drive_from_lambda(const CoupledSystem& sys, double lambda) {
  return lambda * detuning_ab(sys) / (2.0 * std::abs(sys.spectrum_a().n(0, 1)));
}

EffectiveRates effective_hamiltonian_rates(const CoupledSystem& sys, double f, double eta) {
  const Elements e = elements(sys);
  // Matrix elements are i * real; -i maps them onto real rates.
  const cd minus_i{0.0, -1.0};
  EffectiveRates r;
  r.xi_zx = f * (minus_i * (e.a_00_01 - e.a_10_11 + eta * (e.b_00_01 - e.b_10_11))).real();
  r.xi_ix = f * (minus_i * (e.a_00_01 + e.a_10_11 + eta * (e.b_00_01 + e.b_10_11))).real();
  r.xi_zz = sys.zz_rate();
  r.eta = std::abs(e.b_00_01) > 1e-8 ? eta_sd(sys) : 0.0;
  r.omega_rabi_10_11 = std::abs(e.b_00_01) > 1e-8 ? rabi_rate_sd(sys, f) : 0.0;

  const QubitSpectrum& a = sys.spectrum_a();
  const double w01_b = sys.spectrum_b().frequency(0, 1);
  r.lambda_ = lambda_from_drive(sys, f);
  r.lambda_12 = 2.0 * f * std::abs(a.n(1, 2)) / (a.frequency(1, 2) - w01_b);
  r.t_fsl = sys.j_c() > 0.0 ? speed_limit(sys) : std::numeric_limits<double>::infinity();
  return r;
}

double speed_limit(const CoupledSystem& sys) {
  const double delta = detuning_ab(sys);
  if (std::abs(delta) < 1e-12) {
    throw Error(ErrorKind::degeneracy, "speed limit: qubit frequencies coincide");
  }
  const Elements e = elements(sys);
  const double cross = std::abs(e.a_10_11 - e.a_00_01);
  if (cross == 0.0) {
    throw Error(ErrorKind::degeneracy, "speed limit: cross matrix elements vanish");
  }
  return std::abs(sys.spectrum_a().n(0, 1)) / (2.0 * cross * std::abs(delta));
}

}  // namespace fluxcnot
