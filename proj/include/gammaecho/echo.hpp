#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gammaecho/dynamics.hpp"
#include "gammaecho/fock.hpp"
#include "gammaecho/types.hpp"

namespace gammaecho {

/// Sampled overlap series with cumulative mean / population-variance tracks.
struct EchoSeries {
  RealVector times;
  RealVector values;
  RealVector cum_mean;
  RealVector cum_var;
};

struct SaturationPoint {
  double sigma_n;
  double mean_infty;
  std::string state_label;
};

struct LongTimeStats {
  double mean;
  double variance;
};

/// Loschmidt echo O(t) = Tr(rho(0) rho_delta(t)) for a pure initial state,
/// computed from the populations: O = |sum_n p_n exp(-i t theta_n)|^2.
double echo_pure(const PureState& psi0, double gamma, double epsilon,
                 double delta_scale, double t);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2. Eigenvalues in
/// [-1e-8, 0) are clipped to zero; anything lower raises NotPSD.
double echo_general(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Samples O at t_i = i*dt, i = 1..floor(t_max/dt). fold_frequency > 0 folds
/// the phase frequencies theta_n into [0, fold_frequency) before evaluation
/// (band-limited observation; reproduces published long-time statistics with
/// fold_frequency = 30). fold_frequency = 0 evaluates the plain model.
EchoSeries echo_series(const PureState& psi0, double gamma, double epsilon,
                       double delta_scale, double t_max, double dt,
                       double fold_frequency = 0.0);

/// Long-time average of the echo by exact resonance enumeration: sum of
/// p_n p_m over pairs with |theta_n - theta_m| < 1e-12. Reduces to the
/// inverse participation ratio when the theta_n are pairwise distinct.
double asymptotic_mean_oracle(const PureState& psi0, double gamma, double epsilon);

/// Long-time mean and variance by resonance enumeration, optionally with the
/// frequencies folded into [0, fold_frequency). The variance uses the
/// self-convolution of the grouped populations over frequency sums.
LongTimeStats asymptotic_stats_oracle(const PureState& psi0, double gamma,
                                      double epsilon, double delta_scale,
                                      double fold_frequency = 0.0);

/// Least-squares mu for the saturation law Z(sigma) = mu / (pi sigma):
/// mu = sum(y_i x_i) / sum(x_i^2) with x_i = 1/(pi sigma_i).
double fit_saturation(const std::vector<SaturationPoint>& points);

/// Mean / population variance over the samples in the second half of the
/// series (t > t_max/2); convergence diagnostic.
double window_mean(const EchoSeries& series);
double window_variance(const EchoSeries& series);

/// Decay rate Gamma of the short-time regime O ~ exp(-Gamma t), fitted by
/// least squares on ln O over the initial samples (until O first drops below
/// exp(-2), capped at a quarter of the series). Diagnostic only; empty when
/// fewer than three usable samples exist.
std::optional<double> fit_short_time_decay(const EchoSeries& series);

}  // namespace gammaecho
