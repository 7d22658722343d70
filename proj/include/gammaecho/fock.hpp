#pragma once

#include <cstdint>
#include <utility>

#include "gammaecho/types.hpp"

namespace gammaecho {

/// Pure state over the truncated Fock basis |0..n_max>, normalized on
/// construction.
class PureState {
 public:
  static PureState from_amplitudes(ComplexVector amps);

  const ComplexVector& amplitudes() const { return amps_; }
  int n_max() const { return static_cast<int>(amps_.size()) - 1; }

  /// Populations p_n = |c_n|^2.
  RealVector populations() const;

 private:
  explicit PureState(ComplexVector amps) : amps_(std::move(amps)) {}
  ComplexVector amps_;

  friend PureState coherent_state(Complex, int);
  friend PureState phase_state(int, int);
  friend PureState fock_state(int, int);
  friend PureState cat_state(Complex, int, int);
  friend PureState random_pure_state(int, std::uint64_t);
};

/// Hermitian unit-trace matrix A_{m,n} over the truncated Fock basis.
/// Hermiticity and trace are validated at construction (1e-12); positive
/// semidefiniteness is checked on demand only.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix entries);

  const ComplexMatrix& entries() const { return entries_; }
  int n_max() const { return static_cast<int>(entries_.rows()) - 1; }

  bool is_positive_semidefinite(double tol = 1e-10) const;

 private:
  ComplexMatrix entries_;
};

struct NumberStats {
  double mean;      // Tr(rho N)
  double variance;  // Tr(rho N^2) - Tr(rho N)^2
  double hs;        // sqrt(1 + 12 variance)
};

// State factories. All of them fail loudly (TruncationTooSmall /
// InvalidCutoff) instead of silently renormalizing a clipped state.
PureState coherent_state(Complex alpha, int n_max);
PureState phase_state(int r, int n_max);
PureState fock_state(int n, int n_max);
PureState cat_state(Complex alpha, int sign, int n_max);
PureState random_pure_state(int n_max, std::uint64_t seed);

/// Cutoff rule for coherent/cat states: starts at max(30, |a|^2 + 8|a|) and
/// grows until the Poisson tail beyond the cutoff drops below 1e-12.
int default_cutoff(Complex alpha);

DensityMatrix to_density(const PureState& psi);
NumberStats number_stats(const DensityMatrix& rho);
double purity(const DensityMatrix& rho);

/// Exact entrywise split rho = D + ND into diagonal and off-diagonal parts.
std::pair<ComplexMatrix, ComplexMatrix> split_diagonal(const ComplexMatrix& op);
std::pair<ComplexMatrix, ComplexMatrix> split_diagonal(const DensityMatrix& rho);

}  // namespace gammaecho
