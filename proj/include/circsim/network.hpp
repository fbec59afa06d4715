#pragma once

#include <string>
#include <vector>

#include "circsim/model_core.hpp"

namespace circsim {

enum class BranchKind { modulated_inductor, capacitor, resistor, series_inductor };

/// One two-terminal element.  For a modulated inductor the constitutive law
/// is written in flux form, i = psi / l(t) with
///   1/l(t) = (1 + sign * depth * cos(Omega t + phase)) / l0,
/// so the inverse inductance has exactly the harmonics {0, +-1}.  Optional
/// series elements (geometric inductance lg, resistance r_series) belong to
/// the same physical branch.
struct Branch {
  BranchKind kind = BranchKind::modulated_inductor;
  int node_a = -1;  ///< -1 denotes ground
  int node_b = -1;

  // modulated inductor
  double l0 = 0.0;
  double depth = 0.0;    ///< per-arm modulation depth (delta0/2 for bridges)
  double omega = 0.0;    ///< modulation frequency [rad/s]
  double phase = 0.0;    ///< bias phase [rad]
  int sign = +1;         ///< +1 or -1, figure-eight orientation
  double lg = 0.0;       ///< series geometric inductance [H]
  double r_series = 0.0; ///< series resistance [ohm]

  // nonlinear SQUID-array realization (transient solver)
  int n_squids = 12;         ///< series SQUIDs sharing one collective phase
  bool flux_driven = false;  ///< true: I_c(t) from the sec law and the fluxes below
  double junction_ic = 2e-6;  ///< per-junction I0 [A]
  double flux_uniform = 0.0;  ///< Phi_u [Wb]
  double flux_grad = 0.0;     ///< Phi_g amplitude [Wb]; total flux = Phi_u + sign Phi_g cos(omega t + phase)

  // capacitor / resistor / series_inductor
  double c = 0.0;
  double r = 0.0;

  static Branch modulated(int a, int b, double l0, double depth, double omega,
                          double phase, int sign, double lg = 0.0, double rs = 0.0);
  static Branch capacitor(int a, int b, double c);
  static Branch resistor(int a, int b, double r);
  static Branch inductor(int a, int b, double l);
};

struct Port {
  int node = -1;
  int ref_node = -1;  ///< -1 = ground
  double z0 = 50.0;
};

/// Immutable netlist for the harmonic-balance and transient solvers.
struct NetworkDescription {
  int n_nodes = 0;  ///< nodes are 0..n_nodes-1; ground is implicit (-1)
  std::vector<Branch> branches;
  std::vector<Port> ports;

  /// Common modulation frequency of all modulated branches (0 if none).
  double modulation_frequency() const;
  /// Checks connectivity, port validity, and modulation consistency.
  void validate() const;
};

/// Which bridges share a bias-line pair (bridge order: arm-A input, arm-A
/// output, arm-B input, arm-B output).
///   crossed:      {0, phi+pi, phi, 0} - each line drives one arm's input
///                 and the other arm's output (flipped); the configuration
///                 that circulates with clean sidebands.
///   per_arm:      {0, 0, phi, phi} - reciprocal at every phi.
///   interleaved:  {0, phi, 0, phi} - gyrates but leaks even sidebands.
enum class BiasPairing { crossed, per_arm, interleaved };

/// Canonical circulator netlist: two convert-delay-convert arms in parallel,
/// 4 bridges x 4 modulated inductors, one capacitor per arm, four ports
/// against ground.  Port nodes are 0..3 (ports 1..4); each arm has two
/// internal nodes carrying its resonant differential mode.
///
/// `delta0` in CircuitParams is the pair-to-pair inverse-inductance contrast
/// of a bridge, so each arm is modulated with depth delta0/2 around l0.
NetworkDescription build_circulator_network(const CircuitParams& p,
                                            BiasPairing pairing = BiasPairing::crossed);

/// Circulator netlist driven by physical flux controls: the arrays follow
/// the sec law at flux Phi_u +- Phi_g cos(Omega t + phase), so the transient
/// solver sees the full nonlinearity.  The linearized small-signal limit
/// matches build_circulator_network at the mapped (l0, delta0).
NetworkDescription build_flux_driven_network(const FluxControl& fc,
                                             const SquidArraySpec& spec,
                                             const CircuitParams& base,
                                             BiasPairing pairing = BiasPairing::crossed);

/// Static measurement configuration: every bridge held at the same fixed
/// imbalance (modulation off), the state used for resonant-delay maps.
/// CircuitParams.imbalance is the pair contrast, as for the driven builder.
NetworkDescription build_static_bridge_network(const CircuitParams& p);

/// Same netlist with one inductor's base inductance scaled by (1 + epsilon);
/// used to probe the symmetry-protected sideband cancellation.
NetworkDescription perturb_one_inductor(NetworkDescription net, double epsilon);

}  // namespace circsim
