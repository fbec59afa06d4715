#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circsim/constants.hpp"

namespace circsim {

/// Thin normal-metal film interrupting superconducting loops, forming an
/// SNS weak link with the electrodes on either side.
struct NormalMetalFilm {
  double thickness = 225e-9;        ///< d [m]
  double sheet_resistance = 0.060;  ///< R_n [ohm/square]
  int squares_in_parallel = 11;     ///< parallel strips in the layout
  int link_squares_in_series = 2;   ///< squares along the current path per strip
  double mean_free_path = 600e-9;   ///< l_n [m]
  double fermi_velocity = 1.4e6;    ///< v_F [m/s]
  double inelastic_length = 2e-6;   ///< l_phi [m]
  double temperature = 0.3;         ///< T [K]
  double link_length = 5e-6;        ///< l [m], along the current flow

  /// Normal-state resistance of the whole link (strips in parallel).
  double link_resistance() const {
    return sheet_resistance * link_squares_in_series / squares_in_parallel;
  }
  void validate() const;
};

/// One temperature stage of the control-line chain.
struct CryostatStage {
  std::string name;
  double temperature = 0.0;           ///< [K]
  double attenuation_into_stage = 0.0;  ///< [dB]
  double bias_current = 0.0;          ///< I_g at this stage [A]
  double effective_resistance = 0.0;  ///< dissipative load [ohm]
  double cooling_power = 0.0;         ///< [W]; <= 0 means unlimited (room temp)
};

struct StageReport {
  CryostatStage stage;
  double heat_load = 0.0;  ///< I^2 R [W]
  double margin = 0.0;     ///< cooling - heat; +inf when unlimited
  bool exceeds_cooling = false;
};

struct PowerBudget {
  std::vector<StageReport> stages;
  double total_heat = 0.0;
};

/// Impedance 2 pi f L of a series bias-line filter inductor.
double bias_filter_impedance(double inductance, double frequency_hz);

/// Current induced around a large circuit loop by the gradiometric drive,
/// (2 pi / 10 p) (M_A / M_a) I_s.
double induced_current(double participation_ratio, double mutual_ratio,
                       double squid_critical_current);

/// Leading-order field of the shielded (quadrupole) bias-line configuration.
double quadrupole_field(double current, double distance, double line_separation);

/// Clean- and dirty-limit coherence lengths {xi_c, xi_d} of the film [m].
std::pair<double, double> coherence_lengths(const NormalMetalFilm& film);

/// SNS proximity-effect figures of the normal-metal link.
struct SnsLink {
  double critical_current = 0.0;   ///< I_n [A]
  double josephson_energy = 0.0;   ///< E_J [J]
  double resistance = 0.0;         ///< R [ohm]
  /// Time for trapped flux to decay out of an array of the given inductance.
  double flux_decay_time(double array_inductance) const {
    return array_inductance / resistance;
  }
};
SnsLink sns_link(const NormalMetalFilm& film);

/// Johnson-noise current spectral density 4 k_B T / Z0 [A^2/Hz].
double johnson_noise_current(double temperature, double z0);

/// Added noise referred to the transmitted tone, from amplitude and phase
/// fluctuations of the bias currents.  Derivatives are finite-difference
/// slopes of S21 against the bias current and the drive phase.
struct AddedNoise {
  double photons = 0.0;             ///< n
  double amplitude_fraction = 0.0;  ///< share contributed by amplitude noise
};
AddedNoise added_noise_photons(double ds21_dig, double ds21_dphi, double bias_current,
                               double current_1db, double temperature, double z0,
                               double omega_p);

/// Heat loads and margins along the control-line chain.
PowerBudget power_budget(const std::vector<CryostatStage>& stages);

/// The default three-stage chain of the power-budget table.
std::vector<CryostatStage> default_power_budget_stages();

}  // namespace circsim
