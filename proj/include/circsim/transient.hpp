#pragma once

#include <complex>
#include <string>
#include <vector>

#include "circsim/network.hpp"

namespace circsim {

/// Options for one time-domain run.  The probe tone is snapped to the
/// nearest rational multiple p/q of the modulation frequency (q bounded)
/// so a strictly periodic steady state exists; harmonics are projected
/// over whole beat periods of that common fundamental.
struct TransientOptions {
  double omega_p = 0.0;       ///< requested probe frequency [rad/s]
  int drive_port = 0;
  double incident_amplitude = 1e-9;  ///< wave amplitude a [sqrt(W)]; P_inc = a^2/2
  int harmonics = 5;          ///< projections at omega_p + m Omega, |m| <= harmonics
  int points_per_period = 64;  ///< resolution of the highest retained harmonic
  int max_denominator = 64;   ///< commensuration bound for omega_p / Omega
  int record_beats = 1;       ///< projection window length
  int max_beats = 400;        ///< settle budget
  double settle_rel_tol = 1e-4;  ///< beat-to-beat projection change at steady state
  bool linear_cpr = false;    ///< replace sin(gamma) by gamma (linearized junctions)
};

struct TransientResult {
  double omega_p = 0.0;          ///< snapped probe frequency [rad/s]
  double omega_requested = 0.0;  ///< before snapping
  double modulation_frequency = 0.0;
  int harmonics = 0;
  double time_step = 0.0;
  int beats_to_settle = 0;
  bool junction_overdriven = false;  ///< a collective phase left the inductive branch

  /// b-wave phasors at each port and sideband, per unit incident wave:
  /// entry (m + harmonics, port).
  std::vector<std::vector<std::complex<double>>> wave;

  /// Time-averaged powers over the record window [W].
  double power_in = 0.0;         ///< incident at the drive port
  double power_reflected = 0.0;  ///< outgoing at the drive port, all harmonics
  double power_out = 0.0;        ///< outgoing at all ports, all harmonics
  double drive_work = 0.0;       ///< power delivered by the flux drive
  double dissipated = 0.0;       ///< resistor losses

  std::complex<double> b(int m, int port) const {
    return wave.at(m + harmonics).at(port);
  }
  /// |S[m][port][drive]| equivalent magnitude.
  double s_mag(int m, int port) const { return std::abs(b(m, port)); }
};

class transient_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrate the nonlinear network to periodic steady state (implicit
/// trapezoidal, fixed commensurate step) and project the port waves onto
/// the sideband grid.  Junction phases follow phi0 dgamma/dt = v per SQUID
/// with i = I_c(t) sin(gamma).
TransientResult simulate(const NetworkDescription& net, const TransientOptions& opt);

/// Rational approximation p/q of x with q <= max_den (best within bound).
std::pair<long, long> best_rational(double x, long max_den);

struct PowerPoint {
  double power_in = 0.0;  ///< [W]
  double value = 0.0;     ///< |S| magnitude at the carrier
};

/// Input power where forward transmission drops 1 dB below its small-signal
/// value.  Returns infinity for a network that never compresses (e.g. with
/// linearized junctions).  The trace of probed points is appended when a
/// sink is supplied.
double find_compression_point(const NetworkDescription& net, const TransientOptions& base,
                              int through_port, std::vector<PowerPoint>* trace = nullptr);

/// Input power where reverse isolation falls below `threshold_db`.
/// The drive port of `base` must be the isolated direction's input.
double find_expansion_point(const NetworkDescription& net, const TransientOptions& base,
                            int isolated_port, double threshold_db = 20.0,
                            std::vector<PowerPoint>* trace = nullptr);

}  // namespace circsim
