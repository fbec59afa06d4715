#include "circsim/phasor.hpp"

#include <cmath>
#include <stdexcept>

#include "circsim/constants.hpp"

namespace circsim {

namespace {
const std::complex<double> I{0.0, 1.0};
}

double SpectralSignal::total_power() const {
  double p = 0.0;
  for (const auto& [m, a] : components) p += std::norm(a);
  return p;
}

SpectralSignal SpectralSignal::pruned(double floor) const {
  SpectralSignal out{reference_frequency, modulation_quantum, {}};
  for (const auto& [m, a] : components)
    if (std::abs(a) > floor) out.components[m] = a;
  return out;
}

SpectralSignal SpectralSignal::single_tone(double omega_p, double omega,
                                           std::complex<double> amplitude, int index) {
  return SpectralSignal{omega_p, omega, {{index, amplitude}}};
}

SpectralSignal multiply(const SpectralSignal& s, double bias_phase) {
  if (s.components.empty()) throw std::invalid_argument("multiply: empty signal");
  const std::complex<double> up = 0.5 * std::exp(I * bias_phase);
  const std::complex<double> down = 0.5 * std::exp(-I * bias_phase);
  SpectralSignal out{s.reference_frequency, s.modulation_quantum, {}};
  for (const auto& [m, a] : s.components) {
    out.components[m + 1] += a * up;
    out.components[m - 1] += a * down;
  }
  return out;
}

SpectralSignal apply_delay(const SpectralSignal& s, double tau) {
  if (tau < 0.0) throw std::invalid_argument("apply_delay: negative delay");
  SpectralSignal out{s.reference_frequency, s.modulation_quantum, {}};
  for (const auto& [m, a] : s.components)
    out.components[m] =
        a * std::exp(I * (static_cast<double>(m) * s.modulation_quantum * tau));
  return out;
}

std::vector<SpectralSignal> propagate_arm_traced(const ArmConfig& arm,
                                                 const SpectralSignal& input,
                                                 Direction dir) {
  const double first =
      dir == Direction::forward ? arm.first_multiplier_phase : arm.second_multiplier_phase;
  const double second =
      dir == Direction::forward ? arm.second_multiplier_phase : arm.first_multiplier_phase;
  std::vector<SpectralSignal> stages;
  stages.push_back(input);
  stages.push_back(multiply(stages.back(), first));
  stages.push_back(apply_delay(stages.back(), arm.delay));
  stages.push_back(multiply(stages.back(), second));
  return stages;
}

SpectralSignal propagate_arm(const ArmConfig& arm, const SpectralSignal& input,
                             Direction dir) {
  return propagate_arm_traced(arm, input, dir).back();
}

SpectralSignal propagate_two_arm_network(const ArmConfig& arm_a, const ArmConfig& arm_b,
                                         const SpectralSignal& input, Direction dir) {
  const SpectralSignal out_a = propagate_arm(arm_a, input, dir);
  const SpectralSignal out_b = propagate_arm(arm_b, input, dir);
  SpectralSignal out{input.reference_frequency, input.modulation_quantum,
                     out_a.components};
  for (const auto& [m, a] : out_b.components) out.components[m] += a;
  return out;
}

std::pair<ArmConfig, ArmConfig> canonical_gyrator_arms(double omega) {
  if (!(omega > 0.0))
    throw std::invalid_argument("canonical_gyrator_arms: omega must be positive");
  const double tau = pi / (2.0 * omega);
  ArmConfig a{0.0, -pi / 2.0, tau};
  ArmConfig b{pi / 2.0, 0.0, tau};
  return {a, b};
}

std::pair<double, double> generalized_transmission(double omega_tau, double phi) {
  const double s21 = 0.5 * (1.0 - std::cos(omega_tau + phi));
  const double s12 = 0.5 * (1.0 - std::cos(omega_tau - phi));
  return {s21, s12};
}

}  // namespace circsim
