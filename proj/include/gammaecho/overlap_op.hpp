#pragma once

#include <utility>

#include "gammaecho/fock.hpp"
#include "gammaecho/phase_space.hpp"
#include "gammaecho/types.hpp"

namespace gammaecho {

/// Symmetrized overlap operator R = [rho0 rho_t + rho_t rho0]/K with K fixed
/// from rho0 alone (K = 2 Tr rho0^2, so that tr R(0) = 1). Not a density
/// matrix, but Hermitian, and tr R(t) equals the echo for pure rho0.
struct OverlapOperator {
  ComplexMatrix entries;
  double k_norm;
};

OverlapOperator overlap_operator(const DensityMatrix& rho0, const DensityMatrix& rho_t);

/// Rank-1 shortcut for a pure reference state: R = (|psi><psi| rho_t +
/// rho_t |psi><psi|)/2. The dense-product path above stays as the oracle.
OverlapOperator overlap_operator(const PureState& psi0, const DensityMatrix& rho_t);

std::pair<ComplexMatrix, ComplexMatrix> split_overlap_operator(const OverlapOperator& op);

struct OverlapFieldSet {
  PhaseSpaceField total;
  PhaseSpaceField diagonal;
  PhaseSpaceField nondiagonal;
};

/// Wigner transform of R built from rho_delta(t), split into diagonal and
/// non-diagonal contributions. total = diagonal + nondiagonal pointwise.
OverlapFieldSet wigner_overlap_components(const DensityMatrix& rho0, double gamma,
                                          double epsilon, double delta_scale,
                                          double t, const PhaseSpaceGrid& grid);

}  // namespace gammaecho
