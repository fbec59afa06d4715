#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "circsim/network.hpp"

namespace circsim {

class solver_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Port-to-port scattering with sideband resolution: entry(m, mu, nu) is the
/// outgoing wave at port mu and frequency omega_p + m*Omega per unit wave
/// incident at port nu at omega_p (power-wave normalization, common Z0).
struct HarmonicScatteringMatrix {
  double probe_frequency = 0.0;       ///< omega_p [rad/s]
  double modulation_frequency = 0.0;  ///< Omega [rad/s]
  int truncation = 0;                 ///< M
  int n_ports = 0;
  std::vector<Eigen::MatrixXcd> blocks;  ///< 2M+1 matrices, index m+M

  const Eigen::MatrixXcd& at(int m) const { return blocks.at(m + truncation); }
  std::complex<double> entry(int m, int out_port, int in_port) const {
    return at(m)(out_port, in_port);
  }
  /// Total scattered power sum_{m,mu} |S[m][mu][nu]|^2 for one drive port.
  double scattered_power(int in_port) const;
};

/// Harmonic-balance solve of the linear periodically-time-varying network.
///
/// Node voltages are expanded over {omega_p + m Omega}, modulated inductors
/// carry branch-flux unknowns, and the inverse-inductance modulation couples
/// adjacent sideband blocks only (block-tridiagonal system).  Ports enter as
/// Thevenin sources behind Z0; scattering entries follow from power waves
/// a = (V + Z0 I)/2 sqrt(Z0), b = (V - Z0 I)/2 sqrt(Z0).
///
/// Preconditions: M >= 1 for a modulated network (M = 0 required when the
/// modulation frequency is zero), and omega_p + m Omega > 0 for |m| <= M.
HarmonicScatteringMatrix solve(const NetworkDescription& net, double omega_p, int M);

/// Max change of any |S[0]| entry when the truncation is doubled.
double truncation_error(const NetworkDescription& net, double omega_p, int M);

/// One solve per grid frequency.  Points are independent; `threads` > 1
/// fans them out with a deterministic merge by grid index (0 = hardware).
std::vector<HarmonicScatteringMatrix> sweep(const NetworkDescription& net,
                                            const std::vector<double>& omega_grid,
                                            int M, int threads = 1);

/// Group delay d angle(S)/d omega from a uniform frequency sweep.  Samples
/// are first multiplied by e^{i omega tau_d} to remove a known chain delay;
/// phase is unwrapped and differentiated (central differences, one-sided at
/// the ends).  Throws if the phase steps are too coarse to unwrap.
std::vector<double> group_delay(const std::vector<double>& omega,
                                const std::vector<std::complex<double>>& s,
                                double de_embed_delay = 0.0);

/// Response of the gyrating differential mode: drive ports (1,3) as a pair
/// (+a, -a)/sqrt2 and project the output on ports (2,4) likewise.  Isolates
/// the resonant path from the common-mode prompt scattering.
std::complex<double> differential_transmission(const HarmonicScatteringMatrix& s);

/// Peak location and -3 dB full width of |differential_transmission|^2 over
/// a frequency interval, refined by golden-section search.
struct ResonancePeak {
  double omega = 0.0;
  double fwhm = 0.0;
  double peak_value = 0.0;
};
ResonancePeak find_differential_resonance(const NetworkDescription& net, double omega_lo,
                                          double omega_hi, int M = 0);

}  // namespace circsim
