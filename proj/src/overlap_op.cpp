#include "gammaecho/overlap_op.hpp"

#include "gammaecho/dynamics.hpp"
#include "gammaecho/errors.hpp"

namespace gammaecho {

OverlapOperator overlap_operator(const DensityMatrix& rho0, const DensityMatrix& rho_t) {
  if (rho0.n_max() != rho_t.n_max())
    throw DimensionMismatch("overlap operator needs matching dimensions");
  const double k = 2.0 * purity(rho0);
  const ComplexMatrix prod = rho0.entries() * rho_t.entries();
  return {(prod + prod.adjoint()) / k, k};
}

OverlapOperator overlap_operator(const PureState& psi0, const DensityMatrix& rho_t) {
  if (psi0.n_max() != rho_t.n_max())
    throw DimensionMismatch("overlap operator needs matching dimensions");
  const ComplexVector& c = psi0.amplitudes();
  const ComplexVector v = rho_t.entries() * c;
  // K = 2 for a pure reference, so R = (c v^dag + v c^dag)/2
  return {(c * v.adjoint() + v * c.adjoint()) / 2.0, 2.0};
}

std::pair<ComplexMatrix, ComplexMatrix> split_overlap_operator(const OverlapOperator& op) {
  return split_diagonal(op.entries);
}

OverlapFieldSet wigner_overlap_components(const DensityMatrix& rho0, double gamma,
                                          double epsilon, double delta_scale,
                                          double t, const PhaseSpaceGrid& grid) {
  const DensityMatrix rho_t = evolve_delta(rho0, gamma, epsilon, delta_scale, t);
  const OverlapOperator op = overlap_operator(rho0, rho_t);
  const auto [diag, nondiag] = split_overlap_operator(op);
  return {wigner(op.entries, grid), wigner(diag, grid), wigner(nondiag, grid)};
}

}  // namespace gammaecho
