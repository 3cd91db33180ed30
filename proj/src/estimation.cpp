#include "gaussclone/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gaussclone/symmetric_cloner.hpp"

namespace gaussclone {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

void check_sigma(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("estimation: sigma must be >= 0");
  }
}

void check_trials(std::int64_t n) {
  if (n < 1000) {
    throw std::invalid_argument("estimation: need at least 1000 trials");
  }
}

// Chunked MC of the per-component squared error; trial_error(stream) must
// consume a fixed number of deviates per call.
template <typename TrialError>
MseEstimate run_mse(std::int64_t n, std::uint64_t seed, TrialError&& trial) {
  struct Partial {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  const std::int64_t n_chunks = (n + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<Partial> partials(static_cast<std::size_t>(n_chunks));
  for_each_chunk(n_chunks, [&](std::int64_t c) {
    NormalStream stream = NormalStream::substream(seed, c);
    const std::int64_t begin = c * kMonteCarloChunk;
    const std::int64_t end = std::min(n, begin + kMonteCarloChunk);
    long double sum = 0.0L;
    long double sum_sq = 0.0L;
    for (std::int64_t i = begin; i < end; ++i) {
      const double err = trial(stream);
      sum += err;
      sum_sq += static_cast<long double>(err) * err;
    }
    partials[static_cast<std::size_t>(c)] = {static_cast<double>(sum),
                                             static_cast<double>(sum_sq)};
  });
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const Partial& part : partials) {
    sum += part.sum;
    sum_sq += part.sum_sq;
  }
  MseEstimate result;
  result.n_trials = n;
  result.mse = sum / static_cast<double>(n);
  if (n > 1) {
    const double variance = std::max(
        0.0, (sum_sq - sum * result.mse) / static_cast<double>(n - 1));
    result.std_error = std::sqrt(variance / static_cast<double>(n));
  }
  return result;
}

double squared_error(Amplitude estimate, Amplitude truth) {
  const double dx = estimate.real() - truth.real();
  const double dy = estimate.imag() - truth.imag();
  return 0.5 * (dx * dx + dy * dy);  // per component
}

}  // namespace

DualHomodyneOutcome simulate_dual_homodyne(Amplitude alpha,
                                           NormalStream& stream) {
  DualHomodyneOutcome outcome;
  outcome.x_plus = std::numbers::sqrt2 * alpha.real() + stream.next();
  outcome.x_minus = std::numbers::sqrt2 * alpha.imag() + stream.next();
  return outcome;
}

DualHomodyneOutcome simulate_dual_homodyne(Amplitude alpha,
                                           std::uint64_t seed) {
  NormalStream stream(seed);
  return simulate_dual_homodyne(alpha, stream);
}

Amplitude bayes_estimate(const DualHomodyneOutcome& outcome, double sigma) {
  check_sigma(sigma);
  const double s = sigma * sigma;
  const double shrinkage = 2.0 * s / (2.0 * s + 1.0);
  return kInvSqrt2 * shrinkage * Amplitude(outcome.x_plus, outcome.x_minus);
}

Amplitude clone_based_estimate(double x_plus_clone1, double x_minus_clone2) {
  return 0.5 * Amplitude(x_plus_clone1, x_minus_clone2);
}

MseEstimate estimator_mse_detail(DualHomodyneEstimator estimator, double sigma,
                                 std::int64_t n, std::uint64_t seed) {
  check_sigma(sigma);
  check_trials(n);
  return run_mse(n, seed, [=](NormalStream& stream) {
    const Amplitude alpha(sigma * stream.next(), sigma * stream.next());
    const DualHomodyneOutcome outcome = simulate_dual_homodyne(alpha, stream);
    const Amplitude estimate =
        estimator == DualHomodyneEstimator::bayes
            ? bayes_estimate(outcome, sigma)
            : kInvSqrt2 * Amplitude(outcome.x_plus, outcome.x_minus);
    return squared_error(estimate, alpha);
  });
}

double estimator_mse(double sigma, std::int64_t n, std::uint64_t seed) {
  return estimator_mse_detail(DualHomodyneEstimator::bayes, sigma, n, seed)
      .mse;
}

MseEstimate clone_estimator_mse(double coeff, double sigma, std::int64_t n,
                                std::uint64_t seed) {
  check_sigma(sigma);
  check_trials(n);
  if (!std::isfinite(coeff)) {
    throw std::invalid_argument("clone_estimator_mse: coeff must be finite");
  }
  const double gain = optimal_gain(sigma);
  const double g = std::sqrt(gain / 2.0);
  const double noise_sd = std::sqrt(gain);
  return run_mse(n, seed, [=](NormalStream& stream) {
    const Amplitude alpha(sigma * stream.next(), sigma * stream.next());
    // X+ of clone 1 and X- of clone 2 are uncorrelated: the shared amplifier
    // noise is quadrature-diagonal and the split ancilla is vacuum.
    const double x_plus = 2.0 * g * alpha.real() + noise_sd * stream.next();
    const double x_minus = 2.0 * g * alpha.imag() + noise_sd * stream.next();
    const Amplitude estimate = coeff * Amplitude(x_plus, x_minus);
    return squared_error(estimate, alpha);
  });
}

}  // namespace gaussclone
