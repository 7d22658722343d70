#include "gammaecho/dynamics.hpp"

#include <cmath>
#include <cstdint>

#include "gammaecho/errors.hpp"

namespace gammaecho {
namespace detail {

namespace {
// 2*pi split into a double and its residual for compensated reduction.
constexpr double kTwoPiHi = 6.283185307179586232e+00;
constexpr double kTwoPiLo = 2.449293598294706414e-16;
}  // namespace

Complex cis_neg_product(double a, double b) {
  const double prod = a * b;
  if (!(std::abs(prod) < 9.0e15)) {
    // beyond exact-integer double range the reduction below cannot help;
    // these terms carry negligible weight in every sweep we run
    const double r = std::fmod(prod, kTwoPi);
    return Complex(std::cos(r), -std::sin(r));
  }
  const double err = std::fma(a, b, -prod);  // a*b = prod + err exactly
  const double k = std::nearbyint(prod / kTwoPi);
  double r = std::fma(-k, kTwoPiHi, prod);
  r = r - k * kTwoPiLo + err;
  return Complex(std::cos(r), -std::sin(r));
}

double real_power(double base, double gamma) {
  if (gamma == std::floor(gamma) && std::abs(gamma) <= 512.0) {
    std::int64_t e = static_cast<std::int64_t>(gamma);
    const bool inv = e < 0;
    if (inv) e = -e;
    double acc = 1.0;
    double cur = base;
    while (e > 0) {
      if (e & 1) acc *= cur;
      cur *= cur;
      e >>= 1;
    }
    return inv ? 1.0 / acc : acc;
  }
  return std::pow(base, gamma);
}

}  // namespace detail

void GammaParams::validate() const {
  if (!(epsilon > 0.0)) throw InvalidParams("epsilon must be > 0");
  if (!(hbar > 0.0)) throw InvalidParams("hbar must be > 0");
}

PhaseSpectrum spectrum(const GammaParams& params, int n_max) {
  params.validate();
  if (n_max < 0) throw InvalidParams("n_max must be >= 0");
  const double nl = params.lam * detail::real_power(params.hbar, 2.0 * params.gamma);
  RealVector e(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double nn = double(n) * n;
    e(n) = params.hbar * params.omega * n +
           nl * detail::real_power(nn + params.epsilon, params.gamma);
  }
  return {std::move(e)};
}

RealVector delta_phases(double gamma, double epsilon, double delta_scale, int n_max) {
  if (!(epsilon > 0.0)) throw InvalidParams("epsilon must be > 0");
  if (n_max < 0) throw InvalidParams("n_max must be >= 0");
  RealVector theta(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    theta(n) = delta_scale * detail::real_power(double(n) * n + epsilon, gamma);
  return theta;
}

namespace {

// Entrywise phase conjugation from angular frequencies w_n: the upper
// triangle gets exp(-i t (w_m - w_n)) and the lower is mirrored, so
// Hermiticity and the diagonal are preserved exactly.
DensityMatrix apply_phases(const DensityMatrix& rho0, const RealVector& w, double t) {
  const auto& A = rho0.entries();
  const int dim = static_cast<int>(A.rows());
  if (w.size() != dim) throw DimensionMismatch("phase table does not match state dimension");
  ComplexMatrix out(dim, dim);
  for (int m = 0; m < dim; ++m) {
    out(m, m) = A(m, m);
    for (int n = m + 1; n < dim; ++n) {
      const Complex phase = detail::cis_neg_product(t, w(m) - w(n));
      out(m, n) = phase * A(m, n);
      out(n, m) = std::conj(out(m, n));
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace

DensityMatrix evolve(const DensityMatrix& rho0, const GammaParams& params, double t) {
  const PhaseSpectrum spec = spectrum(params, rho0.n_max());
  return apply_phases(rho0, spec.energies / params.hbar, t);
}

DensityMatrix evolve_delta(const DensityMatrix& rho0, double gamma, double epsilon,
                           double delta_scale, double t) {
  return apply_phases(rho0, delta_phases(gamma, epsilon, delta_scale, rho0.n_max()), t);
}

std::optional<double> fundamental_period(double gamma, double epsilon, double delta_scale) {
  const bool gamma_pos_int = gamma >= 1.0 && gamma == std::floor(gamma);
  const bool eps_pos_int = epsilon >= 1.0 && epsilon == std::floor(epsilon);
  if (gamma_pos_int && eps_pos_int && delta_scale != 0.0)
    return kTwoPi / delta_scale;
  return std::nullopt;
}

}  // namespace gammaecho
