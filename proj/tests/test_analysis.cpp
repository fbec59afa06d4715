#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "circsim/analysis.hpp"

using namespace circsim;
using cplx = std::complex<double>;

TEST_CASE("dissipation from reflection and transmission magnitudes") {
  CHECK(dissipation_db(0.6, 0.8) == doctest::Approx(0.0).epsilon(1e-12));  // R^2+T^2 = 1
  CHECK(dissipation_db(0.3, 0.9) == doctest::Approx(0.4575749).epsilon(1e-6));
  CHECK(dissipation_db(0.0, std::pow(10.0, -0.05)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(dissipation_db(0.0, 0.0)));
  CHECK_THROWS_AS(dissipation_db(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(dissipation_db(0.5, 1.2), std::invalid_argument);
}

TEST_CASE("isolation bandwidth of a constant profile") {
  std::vector<double> f, iso;
  for (int i = 0; i <= 100; ++i) {
    f.push_back(4.0e9 + i * 1e6);
    iso.push_back(30.0);
  }
  CHECK(isolation_bandwidth(f, iso) == doctest::Approx(100e6).epsilon(1e-12));
}

TEST_CASE("isolation bandwidth of a synthetic Lorentzian dip") {
  // iso(f) = peak / (1 + ((f-f0)/gamma)^2) crosses 20 dB at
  // f0 +- gamma sqrt(peak/20 - 1); width = 2 gamma for peak = 40 dB.
  const double f0 = 4.5e9, gamma = 10e6, peak = 40.0;
  std::vector<double> f, iso;
  for (int i = -200; i <= 200; ++i) {
    const double x = f0 + i * 0.5e6;
    f.push_back(x);
    iso.push_back(peak / (1.0 + std::pow((x - f0) / gamma, 2)));
  }
  const double expected = 2.0 * gamma;
  CHECK(isolation_bandwidth(f, iso) == doctest::Approx(expected).epsilon(0.5e6 / expected));
}

TEST_CASE("isolation bandwidth is monotone in the threshold and handles no-crossing") {
  std::vector<double> f, iso;
  for (int i = -100; i <= 100; ++i) {
    const double x = 4.5e9 + i * 1e6;
    f.push_back(x);
    iso.push_back(35.0 / (1.0 + std::pow((x - 4.5e9) / 20e6, 2)));
  }
  double prev = 1e18;
  for (double thr : {5.0, 10.0, 20.0, 30.0}) {
    const double bw = isolation_bandwidth(f, iso, thr);
    CHECK(bw <= prev);
    prev = bw;
  }
  CHECK(isolation_bandwidth(f, iso, 40.0) == 0.0);
  CHECK_THROWS_AS(isolation_bandwidth({1.0}, {30.0}), std::invalid_argument);
}

TEST_CASE("sideband suppression of a synthetic harmonic matrix") {
  HarmonicScatteringMatrix s;
  s.truncation = 2;
  s.n_ports = 4;
  s.blocks.assign(5, Eigen::MatrixXcd::Zero(4, 4));
  s.blocks[2](1, 0) = 0.9;            // carrier, port 1 -> 2
  s.blocks[3](1, 0) = 0.009;          // m = +1
  s.blocks[0](1, 0) = cplx{0, 0.002};  // m = -2
  CHECK(sideband_suppression(s, 1, 0) == doctest::Approx(40.0).epsilon(1e-9));
  CHECK(sideband_suppression(s, 1, 0, SidebandSet::even) ==
        doctest::Approx(20.0 * std::log10(0.9 / 0.002)).epsilon(1e-9));
  // zero carrier -> -inf sentinel
  CHECK(std::isinf(sideband_suppression(s, 2, 0)));
}

TEST_CASE("balanced reflection closed form") {
  // omega -> 0 limit is 2 Z0 / (-4 Z0) = -1/2
  CHECK(std::abs(gamma_balanced(1e-3, 1e-9, 50.0) - cplx{-0.5, 0.0}) < 1e-6);
  CHECK(std::abs(gamma_balanced(2.0 * pi * 5e9, 1e-9, 50.0)) ==
        doctest::Approx(0.5177441).epsilon(1e-6));
}

TEST_CASE("reflection calibration") {
  const double w = 2.0 * pi * 5e9;
  const cplx r_bal{0.3, -0.2};
  CHECK(std::abs(reflection_calibration(r_bal, r_bal, w, 1e-9, 50.0) -
                 gamma_balanced(w, 1e-9, 50.0)) < 1e-15);
  // composing with the inverse map recovers the input
  const cplx r_op{0.1, 0.4};
  const cplx g_op = reflection_calibration(r_op, r_bal, w, 1e-9, 50.0);
  const cplx back = g_op / gamma_balanced(w, 1e-9, 50.0) * r_bal;
  CHECK(std::abs(back - r_op) < 1e-15);
  CHECK_THROWS_AS(reflection_calibration(r_op, cplx{0, 0}, w, 1e-9, 50.0),
                  std::invalid_argument);
}

TEST_CASE("photons per inverse bandwidth") {
  const double w = 2.0 * pi * 4.044e9;
  const double hbar = constants().hbar;
  CHECK(photons_per_inverse_bandwidth(hbar * w * 50e6, w, 50e6) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const double n = photons_per_inverse_bandwidth(1e-12, w, 50e6);
  CHECK(n == doctest::Approx(7464.0).epsilon(1e-3));
  CHECK(n > 1e3);
  CHECK(photons_per_inverse_bandwidth(0.5e-12, w, 50e6) == doctest::Approx(0.5 * n).epsilon(1e-12));
  CHECK_THROWS_AS(photons_per_inverse_bandwidth(0.0, w, 50e6), std::invalid_argument);
}

TEST_CASE("group-delay de-embedding") {
  std::vector<double> omega;
  std::vector<cplx> s;
  const double tau_d = 62e-9;
  for (int i = 0; i <= 50; ++i) {
    const double w = 2.0 * pi * (4e9 + i * 10e6);
    omega.push_back(w);
    s.push_back(0.5 * std::exp(cplx{0.0, -w * tau_d}));  // pure chain delay
  }
  auto flat = deembed(omega, s, tau_d);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    CHECK(std::abs(std::arg(flat[i])) < 1e-9);
    CHECK(std::abs(flat[i]) == doctest::Approx(std::abs(s[i])).epsilon(1e-12));
  }
  auto same = deembed(omega, s, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(same[i] - s[i]) < 1e-15);
}
