#include "circsim/model_core.hpp"

#include <cmath>

namespace circsim {

double PhysicalConstants::flux_quantum() const {
  return 2.0 * pi * reduced_flux_quantum();
}

const PhysicalConstants& constants() {
  static const PhysicalConstants c{};
  return c;
}

void SquidArraySpec::validate() const {
  if (n_squids < 1) throw model_error("squid array needs at least one SQUID");
  if (!(junction_critical_current > 0.0))
    throw model_error("junction critical current must be positive");
}

void FluxControl::validate() const {
  if (drive_frequency < 0.0) throw model_error("drive frequency must be non-negative");
}

bool FluxControl::within_validity() const {
  const double half_quantum = 0.5 * constants().flux_quantum();
  return std::abs(uniform_flux) + std::abs(gradiometric_amplitude) < half_quantum;
}

void CircuitParams::validate() const {
  if (!(base_inductance > 0.0)) throw model_error("base inductance must be positive");
  if (!(capacitance > 0.0)) throw model_error("capacitance must be positive");
  if (!(line_impedance > 0.0)) throw model_error("line impedance must be positive");
  if (std::abs(imbalance) >= 1.0) throw model_error("bridge imbalance out of range");
  if (series_inductance < 0.0) throw model_error("series inductance must be non-negative");
  if (parasitic_resistance < 0.0) throw model_error("parasitic resistance must be non-negative");
  if (modulation_frequency < 0.0) throw model_error("modulation frequency must be non-negative");
}

double squid_array_inductance(const SquidArraySpec& spec, double flux) {
  spec.validate();
  const double phi0 = constants().reduced_flux_quantum();
  const double arg = flux / (2.0 * phi0);
  const double c = std::cos(arg);
  // sec pole at flux = Phi_0/2 (mod Phi_0)
  if (std::abs(c) < 1e-12) throw model_error("flux at inductance divergence");
  return spec.n_squids * phi0 / (2.0 * spec.junction_critical_current) / std::abs(c);
}

std::pair<double, double> flux_to_bridge_params(const FluxControl& fc,
                                                const SquidArraySpec& spec) {
  spec.validate();
  const double flux_quantum = constants().flux_quantum();
  const double alpha = pi * fc.uniform_flux / flux_quantum;
  const double beta = pi * fc.gradiometric_amplitude / flux_quantum;
  if (std::abs(alpha) >= pi / 2.0 - 1e-12)
    throw model_error("uniform flux at inductance divergence");
  if (std::abs(beta) >= 2.0)
    throw model_error("gradiometric flux outside Bessel series guard");
  const double j0 = detail::bessel_j0(beta);
  const double j1 = detail::bessel_j1(beta);
  if (std::abs(j0) < 1e-12) throw model_error("gradiometric flux at Bessel zero");
  const double delta0 = -2.0 * std::tan(alpha) * j1 / j0;
  const double phi0 = constants().reduced_flux_quantum();
  const double l0 = spec.n_squids * phi0 / (2.0 * spec.junction_critical_current) /
                    (std::cos(alpha) * j0);
  return {l0, delta0};
}

std::pair<double, double> bridge_inductances(double l0, double delta) {
  if (!(l0 > 0.0)) throw model_error("base inductance must be positive");
  if (std::abs(delta) >= 1.0) throw model_error("bridge imbalance out of range");
  return {l0 / (1.0 + delta), l0 / (1.0 - delta)};
}

double resonant_frequency(const CircuitParams& p) {
  p.validate();
  return std::sqrt((4.0 - p.imbalance * p.imbalance) /
                   (2.0 * p.base_inductance * p.capacitance));
}

double resonant_delay_duration(const CircuitParams& p) {
  p.validate();
  if (p.imbalance == 0.0)
    throw model_error("undercoupled: delay diverges for balanced bridges");
  return 8.0 * p.line_impedance * p.capacitance / (p.imbalance * p.imbalance);
}

namespace detail {

// Power series sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!), n = 0, 1.
// Converges to double precision in < 20 terms for |x| < 2.
static double bessel_series(double x, int n) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= half / k;
  double sum = term;
  for (int k = 1; k < 40; ++k) {
    term *= -(half * half) / (static_cast<double>(k) * (k + n));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j0(double x) { return bessel_series(x, 0); }
double bessel_j1(double x) { return bessel_series(x, 1); }

}  // namespace detail

}  // namespace circsim
