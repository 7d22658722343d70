#include <doctest.h>

#include <cmath>

#include "gammaecho/dynamics.hpp"
#include "gammaecho/errors.hpp"

using namespace gammaecho;

namespace {

GammaParams kerr_params() {
  GammaParams p;  // omega = 0, lam = hbar = epsilon = 1, gamma = 1
  return p;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("spectrum values") {
  const PhaseSpectrum s = spectrum(kerr_params(), 4);
  CHECK(s.energies(0) == 1.0);
  CHECK(s.energies(1) == 2.0);
  CHECK(s.energies(2) == 5.0);
  CHECK(s.energies(3) == 10.0);
  CHECK(s.energies(4) == 17.0);

  GammaParams inv = kerr_params();
  inv.gamma = -1.0;
  const PhaseSpectrum si = spectrum(inv, 5);
  for (int n = 0; n <= 5; ++n)
    CHECK(si.energies(n) == doctest::Approx(1.0 / (n * n + 1.0)).epsilon(1e-15));
  for (int n = 1; n <= 5; ++n) CHECK(si.energies(n) < si.energies(n - 1));

  GammaParams bad = kerr_params();
  bad.epsilon = 0.0;
  CHECK_THROWS_AS(spectrum(bad, 3), InvalidParams);
  CHECK_THROWS_AS(delta_phases(1.0, -1.0, 1.0, 3), InvalidParams);
}

TEST_CASE("evolve preserves the diagonal exactly and everything else to 1e-12") {
  const DensityMatrix rho0 = to_density(coherent_state(2.0, 35));
  GammaParams p = kerr_params();
  p.omega = 0.7;
  p.gamma = 1.3;
  const DensityMatrix rho1 = evolve(rho0, p, 3.21);

  for (int n = 0; n <= rho0.n_max(); ++n)
    CHECK(rho1.entries()(n, n) == rho0.entries()(n, n));
  CHECK(max_abs_diff(rho1.entries(), rho1.entries().adjoint()) == 0.0);
  CHECK(std::abs(rho1.entries().trace() - 1.0) < 1e-12);
  CHECK(std::abs(purity(rho1) - purity(rho0)) < 1e-12);
  const NumberStats s0 = number_stats(rho0);
  const NumberStats s1 = number_stats(rho1);
  CHECK(std::abs(s0.mean - s1.mean) < 1e-12);
  CHECK(std::abs(s0.variance - s1.variance) < 1e-12);
}

TEST_CASE("evolve at t = 0 and full revival at t = 2 pi") {
  const DensityMatrix rho0 = to_density(coherent_state(2.0, 35));
  CHECK(max_abs_diff(evolve(rho0, kerr_params(), 0.0).entries(), rho0.entries()) == 0.0);
  // gamma = 1, eps = 1, omega = 0: all E_m - E_n are integers
  CHECK(max_abs_diff(evolve(rho0, kerr_params(), kTwoPi).entries(), rho0.entries()) < 1e-12);
}

TEST_CASE("one-parameter group") {
  const DensityMatrix rho0 = to_density(random_pure_state(18, 3));
  GammaParams p = kerr_params();
  p.gamma = 2.4;
  p.omega = 0.3;
  // dyadic times, so t1 + t2 is exactly representable
  const DensityMatrix a = evolve(evolve(rho0, p, 1.75), p, 2.5);
  const DensityMatrix b = evolve(rho0, p, 4.25);
  CHECK(max_abs_diff(a.entries(), b.entries()) < 1e-12);
}

TEST_CASE("rotating frame removes omega") {
  const DensityMatrix rho0 = to_density(random_pure_state(12, 11));
  GammaParams with_omega = kerr_params();
  with_omega.gamma = 1.6;
  with_omega.omega = 0.9;
  GammaParams no_omega = with_omega;
  no_omega.omega = 0.0;

  const double t = 2.37;
  const ComplexMatrix evolved = evolve(rho0, with_omega, t).entries();
  ComplexMatrix rotated = evolve(rho0, no_omega, t).entries();
  for (int m = 0; m <= rho0.n_max(); ++m)
    for (int n = 0; n <= rho0.n_max(); ++n)
      rotated(m, n) *= std::exp(Complex(0.0, -with_omega.omega * t * (m - n)));
  CHECK(max_abs_diff(evolved, rotated) < 1e-12);
}

TEST_CASE("evolve_delta basics") {
  const DensityMatrix rho0 = to_density(phase_state(6, 8));
  CHECK(max_abs_diff(evolve_delta(rho0, 1.7, 1.0, 1.0, 0.0).entries(), rho0.entries()) == 0.0);
  // gamma = 2, eps = 1: theta_n = (n^2+1)^2 are integers
  CHECK(max_abs_diff(evolve_delta(rho0, 2.0, 1.0, 1.0, kTwoPi).entries(), rho0.entries()) < 1e-12);
  CHECK_THROWS_AS(evolve_delta(rho0, 2.0, 0.0, 1.0, 1.0), InvalidParams);

  ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
  diag(0, 0) = 0.1; diag(1, 1) = 0.2; diag(2, 2) = 0.3; diag(3, 3) = 0.4;
  const DensityMatrix rho_diag(diag);
  CHECK(max_abs_diff(evolve_delta(rho_diag, 1.3, 0.7, 1.0, 5.5).entries(), diag) == 0.0);
}

TEST_CASE("fundamental period") {
  CHECK(fundamental_period(3.0, 1.0, 1.0) == doctest::Approx(kTwoPi));
  CHECK(fundamental_period(1.0, 2.0, 0.5) == doctest::Approx(2.0 * kTwoPi));
  CHECK(!fundamental_period(1.1, 1.0, 1.0).has_value());
  CHECK(!fundamental_period(-1.0, 1.0, 1.0).has_value());
  CHECK(!fundamental_period(2.0, 0.5, 1.0).has_value());

  const DensityMatrix rho0 = to_density(coherent_state(1.5, 30));
  const auto period = fundamental_period(2.0, 2.0, 1.0);
  REQUIRE(period.has_value());
  CHECK(max_abs_diff(evolve_delta(rho0, 2.0, 2.0, 1.0, *period).entries(),
                     rho0.entries()) < 1e-12);
}

TEST_CASE("phase reduction stays exact for huge integer spectra") {
  // gamma = 4 at n = 40: theta = 1601^4 ~ 6.6e12. The double closest to
  // 2 pi falls short of it by lo = 2.449...e-16, so the exact phase of the
  // product is lo * theta (mod 2 pi); a naive cos(t * theta) would be off
  // by ~1e-4 rad here from argument-reduction loss alone.
  const double lo = 2.449293598294706414e-16;
  const double theta = detail::real_power(1601.0, 4.0);
  const Complex z = detail::cis_neg_product(kTwoPi, theta);
  const Complex expected(std::cos(lo * theta), std::sin(lo * theta));
  CHECK(std::abs(z - expected) < 1e-9);
  const Complex z2 = detail::cis_neg_product(kTwoPi / 2.0, 3.0);
  CHECK(std::abs(z2 - Complex(std::cos(3.0 * lo / 2.0), std::sin(3.0 * lo / 2.0)) *
                          Complex(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("real_power integer and fractional branches") {
  CHECK(detail::real_power(3601.0, 4.0) == 3601.0 * 3601.0 * 3601.0 * 3601.0);
  CHECK(detail::real_power(5.0, -1.0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(detail::real_power(2.0, 0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

}  // TEST_SUITE
