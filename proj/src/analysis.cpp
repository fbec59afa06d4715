#include "circsim/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace circsim {

double dissipation_db(double reflection, double transmission) {
  if (reflection < 0.0 || transmission < 0.0 || reflection > 1.0 || transmission > 1.0)
    throw std::invalid_argument("dissipation: R, T must be amplitude magnitudes in [0,1]");
  const double total = reflection * reflection + transmission * transmission;
  if (total == 0.0) return std::numeric_limits<double>::infinity();
  return -10.0 * std::log10(total);
}

double isolation_bandwidth(const std::vector<double>& freq_hz,
                           const std::vector<double>& isolation_db,
                           double threshold_db) {
  const std::size_t n = freq_hz.size();
  if (n < 2 || isolation_db.size() != n)
    throw std::invalid_argument("isolation_bandwidth: need >= 2 matched samples");

  double widest = 0.0;
  double left = 0.0;
  bool inside = isolation_db[0] > threshold_db;
  if (inside) left = freq_hz[0];
  for (std::size_t i = 1; i < n; ++i) {
    const bool above = isolation_db[i] > threshold_db;
    if (above == inside) continue;
    // linear interpolation of the crossing point (in dB)
    const double t = (threshold_db - isolation_db[i - 1]) /
                     (isolation_db[i] - isolation_db[i - 1]);
    const double x = freq_hz[i - 1] + t * (freq_hz[i] - freq_hz[i - 1]);
    if (inside)
      widest = std::max(widest, x - left);
    else
      left = x;
    inside = above;
  }
  if (inside) widest = std::max(widest, freq_hz[n - 1] - left);
  return widest;
}

double sideband_suppression(const HarmonicScatteringMatrix& s, int through_port,
                            int in_port, SidebandSet set) {
  const double carrier = std::abs(s.entry(0, through_port, in_port));
  if (carrier == 0.0) return -std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (int m = -s.truncation; m <= s.truncation; ++m) {
    if (m == 0) continue;
    if (set == SidebandSet::even && m % 2 != 0) continue;
    worst = std::max(worst, std::abs(s.entry(m, through_port, in_port)));
  }
  if (worst == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(carrier * carrier / (worst * worst));
}

std::complex<double> gamma_balanced(double omega, double inductance, double z0) {
  const std::complex<double> iwl{0.0, omega * inductance};
  return (iwl + 2.0 * z0) / (iwl - 4.0 * z0);
}

std::complex<double> reflection_calibration(std::complex<double> r_op,
                                            std::complex<double> r_bal, double omega,
                                            double inductance, double z0) {
  if (std::abs(r_bal) == 0.0)
    throw std::invalid_argument("reflection_calibration: balanced reference is zero");
  return gamma_balanced(omega, inductance, z0) * r_op / r_bal;
}

double photons_per_inverse_bandwidth(double power_w, double omega, double bandwidth_hz) {
  if (!(power_w > 0.0) || !(omega > 0.0) || !(bandwidth_hz > 0.0))
    throw std::invalid_argument("photons_per_inverse_bandwidth: inputs must be positive");
  return power_w / (constants().hbar * omega * bandwidth_hz);
}

std::vector<std::complex<double>> deembed(const std::vector<double>& omega,
                                          const std::vector<std::complex<double>>& s,
                                          double tau_d) {
  if (omega.size() != s.size())
    throw std::invalid_argument("deembed: mismatched sample counts");
  std::vector<std::complex<double>> out(s.size());
  const std::complex<double> I{0.0, 1.0};
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * std::exp(I * omega[i] * tau_d);
  return out;
}

}  // namespace circsim
