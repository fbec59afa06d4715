#pragma once

#include <stdexcept>
#include <utility>

#include "circsim/constants.hpp"

namespace circsim {

/// Thrown when device parameters leave the validity range of the
/// closed-form circuit model (poles, divergences, out-of-range imbalance).
class model_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series array of N identical SQUIDs acting as one flux-tunable inductor.
struct SquidArraySpec {
  int n_squids = 12;                      ///< SQUIDs in series
  double junction_critical_current = 2e-6;  ///< per-junction I0 [A]

  void validate() const;
};

/// Experimental flux-control knobs for one bridge: a common (uniform) flux,
/// a differential (gradiometric) drive amplitude, and the drive tone.
struct FluxControl {
  double uniform_flux = 0.0;          ///< Phi_u [Wb]
  double gradiometric_amplitude = 0.0;  ///< Phi_g [Wb]
  double drive_frequency = 0.0;       ///< Omega [rad/s]
  double drive_phase_offset = 0.0;    ///< phase between the two bias-line pairs [rad]

  void validate() const;
  /// True while |Phi_u +- Phi_g| stays below Phi_0/2.  Beyond that bound the
  /// simple tunable-bridge picture breaks down (larger drive re-balances the
  /// bridges instead of imbalancing them), so callers should flag results.
  bool within_validity() const;
};

/// Lumped-element degrees of freedom of the circulator circuit.
///
/// The imbalance parameter `delta0` is the pair-to-pair inverse-inductance
/// contrast of a bridge; the individual arms deviate from balance by
/// delta0/2 (see network.hpp).  Loss is optional: `internal_q <= 0` means
/// lossless, `parasitic_resistance` is a series resistance per bridge arm.
struct CircuitParams {
  double base_inductance = 1e-9;     ///< l0 [H]
  double imbalance = 0.0;            ///< delta0, dimensionless, |delta0| < 1
  double capacitance = 1e-12;        ///< c [F]
  double line_impedance = 50.0;      ///< Z0 [ohm]
  double modulation_frequency = 0.0;  ///< Omega [rad/s]
  double drive_phase = 0.0;          ///< phi, phase of the second bias pair [rad]
  double series_inductance = 0.0;    ///< lg, geometric inductance per arm [H]
  double internal_q = 0.0;           ///< Q_int; <= 0 disables capacitor loss
  double parasitic_resistance = 0.0;  ///< r_au per bridge arm [ohm]

  void validate() const;
  bool lossless() const { return internal_q <= 0.0 && parasitic_resistance == 0.0; }
};

/// Inductance of an N-SQUID series array threaded by flux `flux` per SQUID.
/// Diverges at half a flux quantum; throws model_error at the pole.
double squid_array_inductance(const SquidArraySpec& spec, double flux);

/// Map the flux controls (Phi_u, Phi_g sinusoidal drive) onto the bridge
/// parametrization (l0, delta0).  Returns {l0, delta0}.
std::pair<double, double> flux_to_bridge_params(const FluxControl& fc,
                                                const SquidArraySpec& spec);

/// Bridge arm inductances l_pm = l0/(1 +- delta).
std::pair<double, double> bridge_inductances(double l0, double delta);

/// Center frequency of the resonant delay [rad/s].
double resonant_frequency(const CircuitParams& p);

/// Duration of the resonant delay, approximately the inverse linewidth [s].
/// Throws for a balanced bridge (delta0 = 0), whose mode is undercoupled.
double resonant_delay_duration(const CircuitParams& p);

namespace detail {
/// Bessel J0/J1 by power series.  Valid (and guarded) for |x| < 2, which
/// covers gradiometric drives up to ~0.6 flux quanta.
double bessel_j0(double x);
double bessel_j1(double x);
}  // namespace detail

}  // namespace circsim
