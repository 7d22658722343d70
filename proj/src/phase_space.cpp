#include "gammaecho/phase_space.hpp"

#include <cmath>
#include <vector>

#include "gammaecho/errors.hpp"

namespace gammaecho {
namespace {

double trapezoid_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

// Accumulates sum_{j,k} A(j,k) Pi_{j,k}(beta) at one grid point. Kernel
// magnitudes are built from the j = 0 seed x^(a/2) e^(-x/2) / sqrt(a!) and
// the ratio sqrt((j+1)/(j+1+a)); associated Laguerre values come from the
// three-term recurrence in the lower degree.
Complex wigner_point(const ComplexMatrix& a_mat, double q, double p,
                     const std::vector<double>& lgamma_table) {
  const int dim = static_cast<int>(a_mat.rows());
  const double bsq = q * q + p * p;
  const double x = 2.0 * bsq;
  const double lnx = (x > 0.0) ? std::log(x) : 0.0;
  const Complex unit = (bsq > 0.0) ? Complex(q, p) / std::sqrt(bsq) : Complex(1.0, 0.0);

  Complex acc(0.0, 0.0);
  Complex upow(1.0, 0.0);  // exp(i a phi)
  for (int a = 0; a < dim; ++a, upow *= unit) {
    if (a > 0 && x == 0.0) break;  // beta^a vanishes at the origin
    const double mag0 =
        (a == 0) ? std::exp(-bsq)
                 : std::exp(0.5 * (a * lnx - lgamma_table[a]) - bsq);
    if (mag0 == 0.0) continue;  // magnitudes only shrink with j

    double mag = mag0;
    double lprev = 0.0, lcur = 1.0;  // L_{-1}, L_0
    double sign = 1.0;
    for (int j = 0; j + a < dim; ++j) {
      const int k = j + a;
      const Complex pi_jk = (sign * mag * lcur / kPi) * upow;
      acc += a_mat(j, k) * pi_jk;
      if (a > 0) acc += a_mat(k, j) * std::conj(pi_jk);

      const double lnext =
          ((2.0 * j + 1.0 + a - x) * lcur - (j + a) * lprev) / double(j + 1);
      lprev = lcur;
      lcur = lnext;
      mag *= std::sqrt(double(j + 1) / double(j + 1 + a));
      sign = -sign;
    }
  }
  return acc;
}

}  // namespace

PhaseSpaceGrid::PhaseSpaceGrid(double q_min, double q_max, double p_min, double p_max,
                               int n_q, int n_p)
    : q_min(q_min), q_max(q_max), p_min(p_min), p_max(p_max), n_q(n_q), n_p(n_p) {
  if (!(q_max > q_min) || !(p_max > p_min))
    throw InvalidGrid("grid bounds must satisfy max > min");
  if (n_q < 3 || n_p < 3 || n_q % 2 == 0 || n_p % 2 == 0)
    throw InvalidGrid("point counts must be odd and >= 3");
}

PhaseSpaceGrid PhaseSpaceGrid::symmetric(double half_width, int points) {
  return PhaseSpaceGrid(-half_width, half_width, -half_width, half_width, points, points);
}

Complex PhaseSpaceField::integral() const {
  Complex sum(0.0, 0.0);
  for (int i = 0; i < grid.n_q; ++i)
    for (int j = 0; j < grid.n_p; ++j)
      sum += trapezoid_weight(i, grid.n_q) * trapezoid_weight(j, grid.n_p) * values(i, j);
  return sum * grid.dq() * grid.dp();
}

double PhaseSpaceField::max_abs() const { return values.cwiseAbs().maxCoeff(); }

double field_overlap(const PhaseSpaceField& a, const PhaseSpaceField& b) {
  if (a.grid.n_q != b.grid.n_q || a.grid.n_p != b.grid.n_p ||
      a.grid.q_min != b.grid.q_min || a.grid.q_max != b.grid.q_max ||
      a.grid.p_min != b.grid.p_min || a.grid.p_max != b.grid.p_max)
    throw DimensionMismatch("field overlap needs identical grids");
  double sum = 0.0;
  for (int i = 0; i < a.grid.n_q; ++i)
    for (int j = 0; j < a.grid.n_p; ++j)
      sum += trapezoid_weight(i, a.grid.n_q) * trapezoid_weight(j, a.grid.n_p) *
             std::real(a.values(i, j)) * std::real(b.values(i, j));
  return sum * a.grid.dq() * a.grid.dp();
}

Complex pi_mn(Complex beta, int m, int n) {
  if (m < 0 || n < 0) throw InvalidParams("pi_mn needs m, n >= 0");
  if (n < m) return std::conj(pi_mn(beta, n, m));
  ComplexMatrix unit = ComplexMatrix::Zero(n + 1, n + 1);
  unit(m, n) = 1.0;
  std::vector<double> lg(n + 2);
  for (int a = 0; a <= n + 1; ++a) lg[a] = std::lgamma(double(a) + 1.0);
  return wigner_point(unit, beta.real(), beta.imag(), lg);
}

PhaseSpaceField wigner(const ComplexMatrix& op, const PhaseSpaceGrid& grid) {
  if (op.rows() != op.cols() || op.rows() == 0)
    throw DimensionMismatch("operator must be square and non-empty");
  const int dim = static_cast<int>(op.rows());
  std::vector<double> lg(dim + 1);
  for (int a = 0; a <= dim; ++a) lg[a] = std::lgamma(double(a) + 1.0);

  PhaseSpaceField field{grid, ComplexMatrix(grid.n_q, grid.n_p)};
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid.n_q; ++i) {
    const double q = grid.q(i);
    for (int j = 0; j < grid.n_p; ++j)
      field.values(i, j) = wigner_point(op, q, grid.p(j), lg);
  }

  if (std::abs(field.integral() - op.trace()) > 1e-3)
    throw GridTooCoarse("wigner grid fails the trace-reproduction self-test");
  return field;
}

PhaseSpaceField wigner(const DensityMatrix& rho, const PhaseSpaceGrid& grid) {
  return wigner(rho.entries(), grid);
}

PhaseSpaceField husimi(const DensityMatrix& rho, const PhaseSpaceGrid& grid) {
  const int dim = rho.n_max() + 1;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.entries());
  std::vector<int> kept;
  for (int l = 0; l < dim; ++l)
    if (std::abs(es.eigenvalues()(l)) > 1e-15) kept.push_back(l);

  PhaseSpaceField field{grid, ComplexMatrix(grid.n_q, grid.n_p)};
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid.n_q; ++i) {
    ComplexVector coh(dim);
    for (int j = 0; j < grid.n_p; ++j) {
      const Complex beta = Complex(grid.q(i), grid.p(j)) / std::sqrt(2.0);
      coh(0) = std::exp(-0.5 * std::norm(beta));
      for (int n = 1; n < dim; ++n) coh(n) = coh(n - 1) * beta / std::sqrt(double(n));
      double h = 0.0;
      for (int l : kept) {
        const Complex ov = coh.dot(es.eigenvectors().col(l));  // <beta|v_l>
        h += es.eigenvalues()(l) * std::norm(ov);
      }
      field.values(i, j) = h / kTwoPi;
    }
  }

  if (std::abs(field.integral() - 1.0) > 1e-3)
    throw GridTooCoarse("husimi grid fails the normalization self-test");
  return field;
}

double roughness(const DensityMatrix& rho, const PhaseSpaceGrid& grid) {
  const PhaseSpaceField w = wigner(rho, grid);
  const PhaseSpaceField h = husimi(rho, grid);
  double sum = 0.0;
  for (int i = 0; i < grid.n_q; ++i)
    for (int j = 0; j < grid.n_p; ++j)
      sum += trapezoid_weight(i, grid.n_q) * trapezoid_weight(j, grid.n_p) *
             std::norm(w.values(i, j) - h.values(i, j));
  const double r2 = kTwoPi * sum * grid.dq() * grid.dp();
  return std::sqrt(std::max(r2, 0.0));
}

RefinedRoughness roughness_refined(const DensityMatrix& rho, const PhaseSpaceGrid& grid) {
  const PhaseSpaceGrid fine(grid.q_min, grid.q_max, grid.p_min, grid.p_max,
                            2 * grid.n_q - 1, 2 * grid.n_p - 1);
  const double coarse_value = roughness(rho, grid);
  const double fine_value = roughness(rho, fine);
  return {coarse_value, fine_value, fine_value + (fine_value - coarse_value) / 3.0};
}

PhaseSpaceGrid grid_auto(const DensityMatrix& rho, int points) {
  const NumberStats stats = number_stats(rho);
  const double n_eff = stats.mean + 3.0 * std::sqrt(std::max(stats.variance, 0.0));
  const double half_width = std::sqrt(2.0 * (n_eff + 1.0)) + 4.0;
  return PhaseSpaceGrid::symmetric(half_width, points);
}

}  // namespace gammaecho
