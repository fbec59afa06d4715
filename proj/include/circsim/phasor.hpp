#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace circsim {

/// A finite set of rotating-frame phasors: components at detunings m*Omega
/// from the reference carrier, in dimensionless voltage-wave units.
///
/// Sign convention: a delay of length tau multiplies component m by
/// e^{+i m Omega tau} (the upper sideband's phase advances), and a
/// multiplier with bias phase theta sends (m, a) to (m+1, a/2 e^{+i theta})
/// and (m-1, a/2 e^{-i theta}).  The opposite convention transposes the
/// gyrator scattering matrix and is rejected by the tests.
struct SpectralSignal {
  double reference_frequency = 0.0;   ///< omega_p [rad/s]
  double modulation_quantum = 0.0;    ///< Omega [rad/s], spacing of the detuning grid
  std::map<int, std::complex<double>> components;  ///< detuning index -> amplitude

  std::complex<double> amplitude(int m) const {
    auto it = components.find(m);
    return it == components.end() ? std::complex<double>{0.0, 0.0} : it->second;
  }
  double total_power() const;
  /// Drop components below `floor` in magnitude.
  SpectralSignal pruned(double floor = 0.0) const;

  static SpectralSignal single_tone(double omega_p, double omega,
                                    std::complex<double> amplitude = 1.0,
                                    int index = 0);
};

/// One convert-delay-convert arm: two multiplying elements around a delay.
struct ArmConfig {
  double first_multiplier_phase = 0.0;   ///< [rad]
  double second_multiplier_phase = 0.0;  ///< [rad]
  double delay = 0.0;                    ///< tau [s]
};

enum class Direction { forward, backward };

/// Multiply by cos(Omega t + bias): every component splits into two
/// sidebands of half amplitude; coincident indices sum coherently.
SpectralSignal multiply(const SpectralSignal& s, double bias_phase);

/// Propagate through an ideal delay of length tau (rotating-frame phases;
/// the common carrier phase is referenced out).
SpectralSignal apply_delay(const SpectralSignal& s, double tau);

/// Propagate through a single arm: multiply, delay, multiply
/// (element order reversed for backward propagation).
SpectralSignal propagate_arm(const ArmConfig& arm, const SpectralSignal& input,
                             Direction dir);

/// Like propagate_arm, but returns the signal after every stage
/// (input, first multiplier, delay, second multiplier).
std::vector<SpectralSignal> propagate_arm_traced(const ArmConfig& arm,
                                                 const SpectralSignal& input,
                                                 Direction dir);

/// Two arms connected in parallel: each arm sees the full input and the arm
/// outputs superpose coherently at the output node.
SpectralSignal propagate_two_arm_network(const ArmConfig& arm_a, const ArmConfig& arm_b,
                                         const SpectralSignal& input, Direction dir);

/// The arm pair that realizes the ideal gyrator at Omega tau = pi/2:
/// within each arm the second multiplier is in quadrature with the first,
/// and the two arms' biases are offset by pi/2.
std::pair<ArmConfig, ArmConfig> canonical_gyrator_arms(double omega);

/// Transmission weights (1 - cos(Omega tau +- phi))/2 for general Omega tau,
/// normalized to [0, 1].  Returns {s21_weight, s12_weight}.
std::pair<double, double> generalized_transmission(double omega_tau, double phi);

}  // namespace circsim
