#include "gammaecho/echo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gammaecho/errors.hpp"

namespace gammaecho {
namespace {

constexpr double kResonanceTol = 1e-12;  // absolute, on theta differences

RealVector folded(const RealVector& theta, double fold_frequency) {
  if (fold_frequency <= 0.0) return theta;
  RealVector out(theta.size());
  for (Eigen::Index n = 0; n < theta.size(); ++n) {
    double r = std::fmod(theta(n), fold_frequency);
    if (r < 0.0) r += fold_frequency;
    out(n) = r;
  }
  return out;
}

double echo_value(const RealVector& pops, const RealVector& theta, double t) {
  Complex f(0.0, 0.0);
  for (Eigen::Index n = 0; n < pops.size(); ++n)
    f += pops(n) * detail::cis_neg_product(t, theta(n));
  return std::norm(f);
}

// Groups sorted values into clusters closer than kResonanceTol and returns
// (representative, accumulated weight) pairs.
std::vector<std::pair<double, double>> cluster(std::vector<std::pair<double, double>> vw) {
  std::sort(vw.begin(), vw.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& [v, w] : vw) {
    if (!out.empty() && v - out.back().first < kResonanceTol)
      out.back().second += w;
    else
      out.emplace_back(v, w);
  }
  return out;
}

}  // namespace

double echo_pure(const PureState& psi0, double gamma, double epsilon,
                 double delta_scale, double t) {
  const RealVector theta = delta_phases(gamma, epsilon, delta_scale, psi0.n_max());
  return echo_value(psi0.populations(), theta, t);
}

double echo_general(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.n_max() != rho2.n_max())
    throw DimensionMismatch("density matrices differ in dimension");
  const int dim = rho1.n_max() + 1;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es1(rho1.entries());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es2(rho2.entries(), Eigen::EigenvaluesOnly);
  if (es1.eigenvalues().minCoeff() < -1e-8 || es2.eigenvalues().minCoeff() < -1e-8)
    throw NotPSD("input has an eigenvalue below -1e-8");

  RealVector lam = es1.eigenvalues().cwiseMax(0.0);
  const ComplexMatrix sqrt1 =
      es1.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es1.eigenvectors().adjoint();
  const ComplexMatrix m = sqrt1 * rho2.entries() * sqrt1;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> esm(m, Eigen::EigenvaluesOnly);
  const RealVector ev = esm.eigenvalues();
  // eigenvalues at roundoff level would contribute sqrt(eps)-sized noise
  const double cut = std::max(ev.maxCoeff(), 0.0) * 1e-14 * dim;
  double s = 0.0;
  for (int i = 0; i < dim; ++i)
    if (ev(i) > cut) s += std::sqrt(ev(i));
  return s * s;
}

EchoSeries echo_series(const PureState& psi0, double gamma, double epsilon,
                       double delta_scale, double t_max, double dt,
                       double fold_frequency) {
  if (!(dt > 0.0) || t_max < dt) throw InvalidGrid("need dt > 0 and t_max >= dt");
  const RealVector theta =
      folded(delta_phases(gamma, epsilon, delta_scale, psi0.n_max()), fold_frequency);
  const RealVector pops = psi0.populations();

  const auto samples = static_cast<Eigen::Index>(std::floor(t_max / dt + 1e-9));
  EchoSeries s;
  s.times.resize(samples);
  s.values.resize(samples);
  s.cum_mean.resize(samples);
  s.cum_var.resize(samples);

#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < samples; ++i) {
    const double t = double(i + 1) * dt;
    s.times(i) = t;
    s.values(i) = echo_value(pops, theta, t);
  }

  // serial prefix pass (Welford) for the cumulative tracks
  double mean = 0.0, m2 = 0.0;
  for (Eigen::Index i = 0; i < samples; ++i) {
    const double delta = s.values(i) - mean;
    mean += delta / double(i + 1);
    m2 += delta * (s.values(i) - mean);
    s.cum_mean(i) = mean;
    s.cum_var(i) = m2 / double(i + 1);
  }
  return s;
}

double asymptotic_mean_oracle(const PureState& psi0, double gamma, double epsilon) {
  const RealVector theta = delta_phases(gamma, epsilon, 1.0, psi0.n_max());
  const RealVector pops = psi0.populations();
  double mean = 0.0;
  for (Eigen::Index n = 0; n < theta.size(); ++n)
    for (Eigen::Index m = 0; m < theta.size(); ++m)
      if (std::abs(theta(n) - theta(m)) < kResonanceTol) mean += pops(n) * pops(m);
  return mean;
}

LongTimeStats asymptotic_stats_oracle(const PureState& psi0, double gamma,
                                      double epsilon, double delta_scale,
                                      double fold_frequency) {
  const RealVector theta =
      folded(delta_phases(gamma, epsilon, delta_scale, psi0.n_max()), fold_frequency);
  const RealVector pops = psi0.populations();

  std::vector<std::pair<double, double>> freq;
  freq.reserve(theta.size());
  for (Eigen::Index n = 0; n < theta.size(); ++n) freq.emplace_back(theta(n), pops(n));
  const auto groups = cluster(std::move(freq));

  double mean = 0.0;
  for (const auto& [v, w] : groups) mean += w * w;

  // <O^2> = sum_s W(s)^2 with W the self-convolution of the grouped
  // populations over frequency sums
  std::vector<std::pair<double, double>> sums;
  sums.reserve(groups.size() * groups.size());
  for (const auto& [va, wa] : groups)
    for (const auto& [vb, wb] : groups) sums.emplace_back(va + vb, wa * wb);
  const auto sum_groups = cluster(std::move(sums));
  double second = 0.0;
  for (const auto& [v, w] : sum_groups) second += w * w;

  return {mean, second - mean * mean};
}

double fit_saturation(const std::vector<SaturationPoint>& points) {
  if (points.empty()) throw EmptyInput("saturation fit needs at least one point");
  double sxy = 0.0, sxx = 0.0;
  for (const auto& p : points) {
    if (!(p.sigma_n > 0.0)) throw InvalidParams("sigma_n must be > 0");
    const double x = 1.0 / (kPi * p.sigma_n);
    sxy += p.mean_infty * x;
    sxx += x * x;
  }
  return sxy / sxx;
}

double window_mean(const EchoSeries& series) {
  const auto n = series.times.size();
  if (n == 0) throw EmptyInput("empty series");
  const double t_half = series.times(n - 1) / 2.0;
  double sum = 0.0;
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (series.times(i) > t_half) {
      sum += series.values(i);
      ++count;
    }
  return sum / double(count);
}

double window_variance(const EchoSeries& series) {
  const auto n = series.times.size();
  if (n == 0) throw EmptyInput("empty series");
  const double t_half = series.times(n - 1) / 2.0;
  const double mean = window_mean(series);
  double sum = 0.0;
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (series.times(i) > t_half) {
      const double d = series.values(i) - mean;
      sum += d * d;
      ++count;
    }
  return sum / double(count);
}

std::optional<double> fit_short_time_decay(const EchoSeries& series) {
  const auto n = series.times.size();
  const double floor_value = std::exp(-2.0);
  Eigen::Index end = 0;
  while (end < n && end < n / 4 + 1 && series.values(end) > floor_value) ++end;
  if (end < 3) return std::nullopt;
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (Eigen::Index i = 0; i < end; ++i) {
    if (!(series.values(i) > 0.0)) return std::nullopt;
    const double t = series.times(i);
    const double y = std::log(series.values(i));
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double denom = double(end) * stt - st * st;
  if (denom == 0.0) return std::nullopt;
  const double slope = (double(end) * sty - st * sy) / denom;
  return -slope;
}

}  // namespace gammaecho
