#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "circsim/aux_physics.hpp"
#include "circsim/model_core.hpp"

using namespace circsim;

TEST_CASE("bias filter impedance") {
  CHECK(bias_filter_impedance(20e-9, 120e6) == doctest::Approx(15.08).epsilon(1e-3));
  CHECK(bias_filter_impedance(20e-9, 4e9) == doctest::Approx(502.65).epsilon(1e-3));
  CHECK(bias_filter_impedance(20e-9, 4e9) > 500.0);
  CHECK(bias_filter_impedance(20e-9, 0.0) == 0.0);
}

TEST_CASE("induced current around a large loop") {
  CHECK(induced_current(1.0, 1.0, 1e-6) == doctest::Approx(0.6283185e-6).epsilon(1e-6));
  CHECK(induced_current(2.0, 1.0, 1e-6) == doctest::Approx(0.3141593e-6).epsilon(1e-6));
  CHECK(induced_current(1.0, 0.0, 1e-6) == 0.0);
  CHECK_THROWS_AS(induced_current(0.0, 1.0, 1e-6), std::invalid_argument);
}

TEST_CASE("quadrupole field suppression") {
  const double i = 1e-4, r = 175e-6, eps = 17.5e-6;
  const double dipole = constants().vacuum_permeability * i / (2.0 * pi * r);
  CHECK(quadrupole_field(i, r, eps) / dipole == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(quadrupole_field(i, r, eps / 2.0) ==
        doctest::Approx(quadrupole_field(i, r, eps) / 4.0).epsilon(1e-12));
  CHECK(quadrupole_field(0.0, r, eps) == 0.0);
  CHECK_THROWS_AS(quadrupole_field(i, eps, eps), std::invalid_argument);
}

TEST_CASE("normal-metal coherence lengths at 300 mK") {
  NormalMetalFilm film;  // defaults: v_F = 1.4e6 m/s, T = 0.3 K, l_n = 600 nm
  const auto [xi_c, xi_d] = coherence_lengths(film);
  CHECK(xi_c == doctest::Approx(5.673e-6).epsilon(1e-3));
  CHECK(xi_d == doctest::Approx(1.065e-6).epsilon(1e-3));

  NormalMetalFilm hot = film;
  hot.temperature *= 2.0;
  const auto [xi_c2, xi_d2] = coherence_lengths(hot);
  CHECK(xi_c2 == doctest::Approx(xi_c / 2.0).epsilon(1e-12));
  CHECK(xi_d2 == doctest::Approx(xi_d / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("SNS link at the flux-decay design point") {
  NormalMetalFilm film;
  const auto [xi_c, xi_d] = coherence_lengths(film);
  film.link_length = 5.5 * xi_d;
  const auto link = sns_link(film);
  CHECK(link.critical_current == doctest::Approx(1.075e-7).epsilon(1e-2));
  CHECK(link.josephson_energy ==
        doctest::Approx(constants().reduced_flux_quantum() * link.critical_current)
            .epsilon(1e-12));

  // the 12-SQUID array at zero flux dumps trapped flux in under a second
  const double l_array = squid_array_inductance(SquidArraySpec{}, 0.0);
  CHECK(link.flux_decay_time(l_array) < 1.0);
  CHECK(link.flux_decay_time(l_array) == doctest::Approx(4.66e-4).epsilon(0.05));
}

TEST_CASE("flux-decay time falls monotonically with link length") {
  NormalMetalFilm film;
  const auto [xi_c, xi_d] = coherence_lengths(film);
  const double l_array = squid_array_inductance(SquidArraySpec{}, 0.0);
  // below ~4 xi_d the junction resistance underflows (fully proximitized,
  // flux never decays), so scan the representable part of the design range
  double prev = 1e300;
  for (double f = 4.5; f <= 10.0; f += 0.5) {
    film.link_length = f * xi_d;
    const double t = sns_link(film).flux_decay_time(l_array);
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("SNS link limits") {
  NormalMetalFilm film;
  film.link_length = 60e-6;  // far beyond both decay lengths
  const auto link = sns_link(film);
  CHECK(link.critical_current < 1e-15);
  CHECK(link.resistance == doctest::Approx(film.link_resistance()).epsilon(1e-9));

  film.link_length = 0.5e-6;  // below xi_d
  CHECK_THROWS_AS(sns_link(film), std::invalid_argument);
}

TEST_CASE("Johnson noise current spectral density") {
  CHECK(johnson_noise_current(300.0, 50.0) == doctest::Approx(3.3136e-22).epsilon(1e-4));
  CHECK(johnson_noise_current(0.0, 50.0) == 0.0);
  CHECK(johnson_noise_current(600.0, 50.0) ==
        doctest::Approx(2.0 * johnson_noise_current(300.0, 50.0)).epsilon(1e-12));
}

TEST_CASE("added noise photons") {
  const double w = 2.0 * pi * 4.044e9;
  CHECK(added_noise_photons(0.0, 0.0, 1e-4, 1e-6, 300.0, 50.0, w).photons == 0.0);

  const auto n300 = added_noise_photons(2e3, 0.6, 1e-4, 2e-7, 300.0, 50.0, w);
  const auto n7 = added_noise_photons(2e3, 0.6, 1e-4, 2e-7, 7.0, 50.0, w);
  CHECK(n7.photons / n300.photons == doctest::Approx(7.0 / 300.0).epsilon(1e-12));
  CHECK(n7.amplitude_fraction == doctest::Approx(n300.amplitude_fraction).epsilon(1e-12));

  // n depends only on the products (dS/dI * I1dB) and (dS/dphi * I1dB / Ig)
  const auto a = added_noise_photons(2e3, 0.6, 1e-4, 2e-7, 300.0, 50.0, w);
  const auto b = added_noise_photons(4e3, 2.4, 2e-4, 1e-7, 300.0, 50.0, w);
  CHECK(a.photons == doctest::Approx(b.photons).epsilon(1e-12));
  CHECK_THROWS_AS(added_noise_photons(1.0, 1.0, 0.0, 1e-7, 300.0, 50.0, w),
                  std::invalid_argument);
}

TEST_CASE("power budget reproduces the default control-line chain") {
  const auto budget = power_budget(default_power_budget_stages());
  REQUIRE(budget.stages.size() == 3);
  CHECK(budget.stages[0].heat_load == doctest::Approx(5e-1).epsilon(1e-12));
  CHECK(budget.stages[1].heat_load == doctest::Approx(5e-5).epsilon(1e-12));
  CHECK(budget.stages[2].heat_load == doctest::Approx(1e-10).epsilon(1e-12));
  for (const auto& st : budget.stages) CHECK_FALSE(st.exceeds_cooling);
  CHECK(budget.stages[1].margin == doctest::Approx(7.5e-1 - 5e-5).epsilon(1e-12));
  CHECK(budget.total_heat ==
        doctest::Approx(budget.stages[0].heat_load + budget.stages[1].heat_load +
                        budget.stages[2].heat_load)
            .epsilon(1e-15));
}

TEST_CASE("power budget flags overloads and bad chains") {
  auto stages = default_power_budget_stages();
  stages[2].cooling_power = 1e-12;
  const auto budget = power_budget(stages);
  CHECK(budget.stages[2].exceeds_cooling);

  std::swap(stages[0], stages[2]);  // temperatures now increase
  CHECK_THROWS_AS(power_budget(stages), std::invalid_argument);
  CHECK_THROWS_AS(power_budget({}), std::invalid_argument);
}

TEST_CASE("budget formulas scale with the expected power laws") {
  // dimensional audit: I^2 R scaling of stage heat
  auto stages = default_power_budget_stages();
  auto base = power_budget(stages);
  for (auto& st : stages) st.bias_current *= 3.0;
  auto scaled = power_budget(stages);
  for (std::size_t i = 0; i < stages.size(); ++i)
    CHECK(scaled.stages[i].heat_load ==
          doctest::Approx(9.0 * base.stages[i].heat_load).epsilon(1e-12));
}
