#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "circsim/floquet.hpp"

namespace circsim {

/// Figures of merit of one tuned configuration.
struct MetricsRecord {
  double operation_frequency = 0.0;     ///< [Hz]
  double insertion_loss = 0.0;          ///< [dB]
  double max_isolation = 0.0;           ///< [dB]
  double isolation_bandwidth_20db = 0.0;  ///< [Hz]
  double sideband_suppression = 0.0;    ///< [dB]
  double dissipation = 0.0;             ///< [dB]
  double compression_1db = 0.0;         ///< [W]; 0 = not measured
  double expansion_20db = 0.0;          ///< [W]; 0 = not measured
  std::string direction = "ccw";
};

/// -10 log10(R^2 + T^2) with R, T amplitude magnitudes.
double dissipation_db(double reflection, double transmission);

/// Width of the widest contiguous interval where isolation exceeds the
/// threshold, linearly interpolated at the crossings [Hz].
double isolation_bandwidth(const std::vector<double>& freq_hz,
                           const std::vector<double>& isolation_db,
                           double threshold_db = 20.0);

enum class SidebandSet { all, even };

/// Carrier-to-worst-spurious-sideband contrast at the through port [dB].
double sideband_suppression(const HarmonicScatteringMatrix& s, int through_port,
                            int in_port, SidebandSet set = SidebandSet::all);

/// Balanced-bridge reflection closed form.
std::complex<double> gamma_balanced(double omega, double inductance, double z0);

/// Reference a measured operating-point reflection to the balanced state:
/// Gamma_op = Gamma_bal * R_op / R_bal.
std::complex<double> reflection_calibration(std::complex<double> r_op,
                                            std::complex<double> r_bal, double omega,
                                            double inductance, double z0);

/// P / (hbar omega BW): photons processed per inverse bandwidth.
double photons_per_inverse_bandwidth(double power_w, double omega, double bandwidth_hz);

/// Multiply samples by e^{i omega tau_d}; magnitudes unchanged.
std::vector<std::complex<double>> deembed(const std::vector<double>& omega,
                                          const std::vector<std::complex<double>>& s,
                                          double tau_d);

}  // namespace circsim
