#pragma once

#include <optional>

#include "gammaecho/fock.hpp"
#include "gammaecho/types.hpp"

namespace gammaecho {

/// Model constants of H = hbar*omega*N + lam*hbar^(2 gamma) (N^2 + eps)^gamma.
/// delta_scale is the (lambda1 - lambda2) hbar^(2 gamma) prefactor of the
/// Hamiltonian difference, treated as a time-scale factor (default 1).
struct GammaParams {
  double omega = 0.0;
  double lam = 1.0;
  double gamma = 1.0;
  double epsilon = 1.0;
  double hbar = 1.0;
  double delta_scale = 1.0;

  void validate() const;  // throws InvalidParams on epsilon<=0 or hbar<=0
};

struct PhaseSpectrum {
  RealVector energies;  // E_n, n = 0..n_max
};

PhaseSpectrum spectrum(const GammaParams& params, int n_max);

/// theta_n = delta_scale * (n^2 + epsilon)^gamma for n = 0..n_max.
RealVector delta_phases(double gamma, double epsilon, double delta_scale, int n_max);

/// Exact evolution: A_{m,n} -> exp(-i t (E_m - E_n)/hbar) A_{m,n}.
/// Diagonal entries and Hermiticity are preserved exactly by construction.
DensityMatrix evolve(const DensityMatrix& rho0, const GammaParams& params, double t);

/// Interaction-picture evolution under the Hamiltonian difference:
/// A_{m,n} -> exp(-i t (theta_m - theta_n)) A_{m,n}.
DensityMatrix evolve_delta(const DensityMatrix& rho0, double gamma, double epsilon,
                           double delta_scale, double t);

/// 2*pi/delta_scale when gamma and epsilon are both positive integers (all
/// theta differences are then integer multiples of delta_scale); empty
/// otherwise.
std::optional<double> fundamental_period(double gamma, double epsilon, double delta_scale);

namespace detail {

/// exp(-i a*b) with the product reduced mod 2*pi in compensated arithmetic,
/// so phases stay accurate for a*b up to ~1e15 (long-horizon sweeps with
/// large spectral values would otherwise lose the resonance structure).
Complex cis_neg_product(double a, double b);

/// (base)^gamma using exact repeated multiplication when gamma is an integer
/// (keeps integer spectra exactly representable), std::pow otherwise.
double real_power(double base, double gamma);

}  // namespace detail

}  // namespace gammaecho
