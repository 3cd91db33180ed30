#pragma once

#include <cstdint>

#include "gaussclone/numerics.hpp"
#include "gaussclone/phase_space.hpp"

namespace gaussclone {

/// Joint quadrature measurement obtained by splitting the input 50:50 and
/// detecting X+ on one arm and X- on the other. Each outcome is normal with
/// mean (2 alpha_{x,y}) / sqrt(2) and unit variance, independently.
struct DualHomodyneOutcome {
  double x_plus = 0.0;
  double x_minus = 0.0;
};

DualHomodyneOutcome simulate_dual_homodyne(Amplitude alpha,
                                           std::uint64_t seed);
DualHomodyneOutcome simulate_dual_homodyne(Amplitude alpha,
                                           NormalStream& stream);

/// Posterior-mean estimate of alpha under a symmetric Gaussian prior of
/// width sigma: alpha_hat = (1/sqrt(2)) (2 sigma^2 / (2 sigma^2 + 1))
/// (x_plus + i x_minus).
Amplitude bayes_estimate(const DualHomodyneOutcome& outcome, double sigma);

/// Prior-free rescaling of quadratures measured on the two clones of a
/// unity-SNR-transfer cloner: alpha_hat = (x_plus_1 + i x_minus_2) / 2.
Amplitude clone_based_estimate(double x_plus_clone1, double x_minus_clone2);

enum class DualHomodyneEstimator { bayes, unshrunk };

struct MseEstimate {
  double mse = 0.0;
  double std_error = 0.0;
  std::int64_t n_trials = 0;
};

/// Monte Carlo per-component mean squared error of an estimator, with alpha
/// drawn from the symmetric ensemble of width sigma and measurement noise
/// from the dual-homodyne model. The Bayes estimator attains the posterior
/// variance sigma^2 / (2 sigma^2 + 1); the unshrunk one attains 1/2.
MseEstimate estimator_mse_detail(DualHomodyneEstimator estimator, double sigma,
                                 std::int64_t n, std::uint64_t seed);

/// Bayes-estimator MSE (convenience form of estimator_mse_detail).
double estimator_mse(double sigma, std::int64_t n, std::uint64_t seed);

/// MSE of the linear clone-based estimator coeff * (X+_1 + i X-_2), with the
/// clones produced at the fidelity-optimal gain for width sigma. At that
/// gain the minimizing coefficient is exactly 1/2.
MseEstimate clone_estimator_mse(double coeff, double sigma, std::int64_t n,
                                std::uint64_t seed);

}  // namespace gaussclone
