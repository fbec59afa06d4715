#include "circsim/aux_physics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace circsim {

void NormalMetalFilm::validate() const {
  if (!(thickness > 0.0) || !(sheet_resistance > 0.0) || squares_in_parallel < 1 ||
      link_squares_in_series < 1 || !(mean_free_path > 0.0) || !(fermi_velocity > 0.0) ||
      !(inelastic_length > 0.0) || !(temperature > 0.0) || !(link_length > 0.0))
    throw std::invalid_argument("normal-metal film parameters must be positive");
}

double bias_filter_impedance(double inductance, double frequency_hz) {
  if (inductance < 0.0 || frequency_hz < 0.0)
    throw std::invalid_argument("bias_filter_impedance: negative input");
  return 2.0 * pi * frequency_hz * inductance;
}

double induced_current(double participation_ratio, double mutual_ratio,
                       double squid_critical_current) {
  if (!(participation_ratio > 0.0))
    throw std::invalid_argument("induced_current: participation ratio must be positive");
  return (2.0 * pi / (10.0 * participation_ratio)) * mutual_ratio * squid_critical_current;
}

double quadrupole_field(double current, double distance, double line_separation) {
  if (!(distance > line_separation) || !(line_separation > 0.0))
    throw std::invalid_argument("quadrupole_field: expansion invalid for r <= epsilon");
  const double dipole = constants().vacuum_permeability * current / (2.0 * pi * distance);
  const double ratio = line_separation / distance;
  return dipole * ratio * ratio;
}

std::pair<double, double> coherence_lengths(const NormalMetalFilm& film) {
  film.validate();
  const auto& c = constants();
  const double xi_c = c.hbar * film.fermi_velocity / (2.0 * pi * c.boltzmann * film.temperature);
  const double xi_d = std::sqrt(film.mean_free_path * xi_c / 3.0);
  return {xi_c, xi_d};
}

SnsLink sns_link(const NormalMetalFilm& film) {
  film.validate();
  const auto [xi_c, xi_d] = coherence_lengths(film);
  const double l = film.link_length;
  if (!(l > xi_d))
    throw std::invalid_argument("sns_link: formula valid only for links longer than xi_d");
  const auto& c = constants();
  const double kt = c.boltzmann * film.temperature;
  const double rn = film.link_resistance();
  SnsLink out;
  out.critical_current = (2.0 * pi * kt / (rn * c.electron_charge)) * (xi_d / l) * (xi_d / l) *
                         std::exp(-l / xi_d) * std::exp(-l / film.inelastic_length);
  out.josephson_energy = c.reduced_flux_quantum() * out.critical_current;
  out.resistance = rn * std::exp(-out.josephson_energy / kt);
  return out;
}

double johnson_noise_current(double temperature, double z0) {
  if (temperature < 0.0 || !(z0 > 0.0))
    throw std::invalid_argument("johnson_noise_current: bad inputs");
  return 4.0 * constants().boltzmann * temperature / z0;
}

AddedNoise added_noise_photons(double ds21_dig, double ds21_dphi, double bias_current,
                               double current_1db, double temperature, double z0,
                               double omega_p) {
  if (!(bias_current > 0.0))
    throw std::invalid_argument("added_noise_photons: bias current must be positive");
  const double s_i = johnson_noise_current(temperature, z0);
  const double an = std::pow(ds21_dig * current_1db, 2) * s_i;
  const double pn = std::pow(ds21_dphi * current_1db / bias_current, 2) * s_i;
  AddedNoise out;
  const double to_photons = 2.0 * constants().hbar * omega_p / z0;
  out.photons = (an + pn) / to_photons;
  out.amplitude_fraction = (an + pn) > 0.0 ? an / (an + pn) : 0.0;
  return out;
}

PowerBudget power_budget(const std::vector<CryostatStage>& stages) {
  if (stages.empty()) throw std::invalid_argument("power_budget: empty stage chain");
  PowerBudget out;
  double prev_t = std::numeric_limits<double>::infinity();
  for (const auto& st : stages) {
    if (st.temperature > prev_t)
      throw std::invalid_argument("power_budget: temperatures must decrease down the chain");
    if (st.attenuation_into_stage < 0.0)
      throw std::invalid_argument("power_budget: negative attenuation");
    prev_t = st.temperature;
    StageReport rep;
    rep.stage = st;
    rep.heat_load = st.bias_current * st.bias_current * st.effective_resistance;
    if (st.cooling_power > 0.0) {
      rep.margin = st.cooling_power - rep.heat_load;
      rep.exceeds_cooling = rep.margin < 0.0;
    } else {
      rep.margin = std::numeric_limits<double>::infinity();
    }
    out.total_heat += rep.heat_load;
    out.stages.push_back(rep);
  }
  return out;
}

std::vector<CryostatStage> default_power_budget_stages() {
  // Room-temperature drive, 40 dB at 300 K, 20 dB more at the 4 K stage,
  // superconducting twisted pair below with a 10 mOhm contact resistance.
  return {
      CryostatStage{"300K", 300.0, 0.0, 1e-1, 50.0, 0.0},
      CryostatStage{"4K", 4.0, 40.0, 1e-3, 50.0, 7.5e-1},
      CryostatStage{"50mK", 0.05, 20.0, 1e-4, 1e-2, 5e-5},
  };
}

}  // namespace circsim
