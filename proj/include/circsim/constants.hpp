#pragma once

namespace circsim {

/// SI physical constants (2019 redefinition values).
struct PhysicalConstants {
  double hbar = 1.054571817e-34;              ///< reduced Planck constant [J s]
  double electron_charge = 1.602176634e-19;   ///< elementary charge [C]
  double boltzmann = 1.380649e-23;            ///< Boltzmann constant [J/K]
  double vacuum_permeability = 1.25663706212e-6;  ///< mu_0 [H/m]

  /// Reduced flux quantum hbar/2e [Wb].
  double reduced_flux_quantum() const { return hbar / (2.0 * electron_charge); }
  /// Flux quantum 2*pi*phi_0 = h/2e [Wb].
  double flux_quantum() const;
};

/// Shared default instance.
const PhysicalConstants& constants();

inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace circsim
