#include "gammaecho/fock.hpp"

#include <cmath>
#include <random>

#include "gammaecho/errors.hpp"

namespace gammaecho {
namespace {

constexpr double kTailThreshold = 1e-12;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Poisson(|alpha|^2) tail mass beyond n_max, summed upward by ratio
// recursion (avoids the 1 - sum cancellation).
double poisson_tail(double lambda, int n_max) {
  if (lambda == 0.0) return 0.0;
  double logp = -lambda + (n_max + 1) * std::log(lambda) - log_factorial(n_max + 1);
  double p = std::exp(logp);
  double tail = 0.0;
  for (int n = n_max + 1; n <= n_max + 400 && p > 0.0; ++n) {
    tail += p;
    p *= lambda / (n + 1);
  }
  return tail;
}

ComplexVector coherent_amplitudes(Complex alpha, int n_max) {
  ComplexVector c(n_max + 1);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= n_max; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
  return c;
}

}  // namespace

PureState PureState::from_amplitudes(ComplexVector amps) {
  if (amps.size() == 0) throw InvalidCutoff("empty amplitude vector");
  const double norm = amps.norm();
  if (norm < 1e-300) throw InvalidParams("cannot normalize a zero state");
  return PureState(amps / norm);
}

RealVector PureState::populations() const {
  return amps_.cwiseAbs2();
}

int default_cutoff(Complex alpha) {
  const double a = std::abs(alpha);
  int n_max = std::max(30, static_cast<int>(std::ceil(a * a + 8.0 * a)));
  while (poisson_tail(a * a, n_max) >= kTailThreshold) ++n_max;
  return n_max;
}

PureState coherent_state(Complex alpha, int n_max) {
  if (n_max < 0) throw InvalidCutoff("n_max must be >= 0");
  if (poisson_tail(std::norm(alpha), n_max) >= kTailThreshold)
    throw TruncationTooSmall("coherent-state tail beyond n_max exceeds 1e-12");
  ComplexVector c = coherent_amplitudes(alpha, n_max);
  c /= c.norm();
  return PureState(std::move(c));
}

PureState phase_state(int r, int n_max) {
  if (r < 0 || n_max < 0) throw InvalidCutoff("r and n_max must be >= 0");
  if (r > n_max) throw InvalidCutoff("phase state needs r <= n_max");
  ComplexVector c = ComplexVector::Zero(n_max + 1);
  const double amp = 1.0 / std::sqrt(double(r + 1));
  for (int k = 0; k <= r; ++k) c(k) = amp;
  return PureState(std::move(c));
}

PureState fock_state(int n, int n_max) {
  if (n < 0 || n_max < 0) throw InvalidCutoff("n and n_max must be >= 0");
  if (n > n_max) throw InvalidCutoff("fock state needs n <= n_max");
  ComplexVector c = ComplexVector::Zero(n_max + 1);
  c(n) = 1.0;
  return PureState(std::move(c));
}

PureState cat_state(Complex alpha, int sign, int n_max) {
  if (sign != 1 && sign != -1) throw InvalidParams("cat sign must be +1 or -1");
  if (n_max < 0) throw InvalidCutoff("n_max must be >= 0");
  if (poisson_tail(std::norm(alpha), n_max) >= kTailThreshold)
    throw TruncationTooSmall("cat-state tail beyond n_max exceeds 1e-12");
  ComplexVector cp = coherent_amplitudes(alpha, n_max);
  ComplexVector cm = coherent_amplitudes(-alpha, n_max);
  ComplexVector c = cp + double(sign) * cm;
  const double norm = c.norm();
  if (norm < 1e-150)
    throw InvalidParams("cat superposition vanishes (odd cat at alpha = 0)");
  return PureState(c / norm);
}

PureState random_pure_state(int n_max, std::uint64_t seed) {
  if (n_max < 0) throw InvalidCutoff("n_max must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    c(n) = Complex(re, im);
  }
  return PureState(c / c.norm());
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw InvalidDensityMatrix("density matrix must be square and non-empty");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidDensityMatrix("density matrix is not Hermitian within 1e-12");
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > 1e-12)
    throw InvalidDensityMatrix("density matrix trace differs from 1 by more than 1e-12");
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

DensityMatrix to_density(const PureState& psi) {
  const ComplexVector& c = psi.amplitudes();
  return DensityMatrix(c * c.adjoint());
}

NumberStats number_stats(const DensityMatrix& rho) {
  const auto& A = rho.entries();
  double mean = 0.0, second = 0.0;
  for (int n = 0; n <= rho.n_max(); ++n) {
    const double p = std::real(A(n, n));
    mean += n * p;
    second += double(n) * n * p;
  }
  const double variance = second - mean * mean;
  return {mean, variance, std::sqrt(1.0 + 12.0 * variance)};
}

double purity(const DensityMatrix& rho) {
  return std::real((rho.entries() * rho.entries()).trace());
}

std::pair<ComplexMatrix, ComplexMatrix> split_diagonal(const ComplexMatrix& op) {
  ComplexMatrix diag = op.diagonal().asDiagonal();
  return {diag, op - diag};
}

std::pair<ComplexMatrix, ComplexMatrix> split_diagonal(const DensityMatrix& rho) {
  return split_diagonal(rho.entries());
}

}  // namespace gammaecho
