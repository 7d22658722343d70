#pragma once

#include "gammaecho/fock.hpp"
#include "gammaecho/types.hpp"

namespace gammaecho {

/// Uniform (q,p) lattice. Point counts must be odd (>= 3) so symmetric grids
/// contain the origin.
struct PhaseSpaceGrid {
  double q_min, q_max, p_min, p_max;
  int n_q, n_p;

  PhaseSpaceGrid(double q_min, double q_max, double p_min, double p_max,
                 int n_q, int n_p);
  static PhaseSpaceGrid symmetric(double half_width, int points);

  double dq() const { return (q_max - q_min) / (n_q - 1); }
  double dp() const { return (p_max - p_min) / (n_p - 1); }
  double q(int i) const { return q_min + i * dq(); }
  double p(int j) const { return p_min + j * dp(); }
};

/// Complex field sampled on a grid, values(i, j) at (q_i, p_j).
struct PhaseSpaceField {
  PhaseSpaceGrid grid;
  ComplexMatrix values;

  /// Trapezoidal integral over the grid.
  Complex integral() const;
  double max_abs() const;
};

/// 2d trapezoid of the pointwise product of the real parts.
double field_overlap(const PhaseSpaceField& a, const PhaseSpaceField& b);

/// Wigner kernel of |m><n| at beta = q + i p, hbar = 1, normalized so that
/// the kernel integrates to delta_{mn} over dq dp. Conjugate symmetry:
/// pi_mn(beta, m, n) = conj(pi_mn(beta, n, m)).
Complex pi_mn(Complex beta, int m, int n);

/// W{A} = sum_{n,m} A_{n,m} Pi_{n,m} on the grid. Self-checks trace
/// reproduction (|integral - Tr A| <= 1e-3) and throws GridTooCoarse.
PhaseSpaceField wigner(const ComplexMatrix& op, const PhaseSpaceGrid& grid);
PhaseSpaceField wigner(const DensityMatrix& rho, const PhaseSpaceGrid& grid);

/// Husimi function H(q,p) = <beta|rho|beta>/(2 pi) with coherent amplitude
/// beta = (q + i p)/sqrt(2); integrates to 1.
PhaseSpaceField husimi(const DensityMatrix& rho, const PhaseSpaceGrid& grid);

/// Roughness R with R^2 = 2 pi * int |W - H|^2 dq dp.
double roughness(const DensityMatrix& rho, const PhaseSpaceGrid& grid);

/// Refinement diagnostic: roughness on the grid and on its once-refined
/// version (2n-1 points per axis), plus the h^2 Richardson extrapolation.
struct RefinedRoughness {
  double coarse;
  double fine;
  double extrapolated;
};
RefinedRoughness roughness_refined(const DensityMatrix& rho, const PhaseSpaceGrid& grid);

/// Symmetric square grid with half-width sqrt(2 (n_eff + 1)) + 4 where
/// n_eff = number mean + 3 sigma_N.
PhaseSpaceGrid grid_auto(const DensityMatrix& rho, int points = 201);

}  // namespace gammaecho
