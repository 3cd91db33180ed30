#include "gaussclone/symmetric_cloner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaussclone {

namespace {

void check_gain(const ClonerConfig& config) {
  if (!(config.gain >= 1.0) || !std::isfinite(config.gain)) {
    throw std::domain_error("cloner gain must satisfy G >= 1");
  }
}

void check_sigma(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("ensemble width sigma must be >= 0");
  }
}

}  // namespace

GaussianStateXd clone_pair_state(Amplitude alpha, const ClonerConfig& config) {
  check_gain(config);
  GaussianStateXd state = coherent_state(alpha);
  state = apply_phase_insensitive_amp(state, 0, config.gain);
  state = tensor(state, vacuum_state(1));
  return apply_beam_splitter(state, 0, 1, 0.5);
}

CloneReport clone(Amplitude alpha, const ClonerConfig& config) {
  const GaussianStateXd pair = clone_pair_state(alpha, config);
  CloneReport report;
  report.mean_plus = pair.mean_plus(0);
  report.mean_minus = pair.mean_minus(0);
  report.v_plus = pair.var_plus(0);
  report.v_minus = pair.var_minus(0);
  // The amplitude gain is a property of the circuit, not the input; read it
  // off the mean map, probing at alpha = 1 when the input mean vanishes.
  if (alpha.real() != 0.0) {
    report.amplitude_gain = report.mean_plus / (2.0 * alpha.real());
  } else if (alpha.imag() != 0.0) {
    report.amplitude_gain = report.mean_minus / (2.0 * alpha.imag());
  } else {
    const GaussianStateXd probe = clone_pair_state(Amplitude(1.0, 0.0), config);
    report.amplitude_gain = probe.mean_plus(0) / 2.0;
  }
  report.fidelity = fidelity_vs_coherent(alpha, pair, 0);
  report.snr_transfer = snr_transfer(config);
  return report;
}

double snr_transfer(const ClonerConfig& config) {
  check_gain(config);
  const Amplitude probe(1.0, 0.0);
  const GaussianStateXd pair = clone_pair_state(probe, config);
  const double signal_in = 2.0 * probe.real() * (2.0 * probe.real());
  const double signal_out = pair.mean_plus(0) * pair.mean_plus(0);
  return (signal_out / pair.var_plus(0)) / (signal_in / 1.0);
}

EnsembleAverage average_fidelity(const ClonerConfig& config, double sigma,
                                 AverageMethod method, std::int64_t budget,
                                 std::uint64_t seed) {
  check_gain(config);
  check_sigma(sigma);
  if (method == AverageMethod::closed) {
    const double g = std::sqrt(config.gain / 2.0);
    const double detune = 1.0 - g;
    EnsembleAverage result;
    result.method = AverageMethod::closed;
    result.value =
        2.0 / ((1.0 + config.gain) + 4.0 * sigma * sigma * detune * detune);
    return result;
  }
  const GaussianEnsemble ensemble{sigma, sigma, 0.0, 0.0};
  auto fidelity = [&config](Amplitude alpha) {
    return fidelity_vs_coherent(alpha, clone_pair_state(alpha, config), 0);
  };
  return average(fidelity, ensemble, method, budget, seed);
}

double optimal_gain(double sigma) {
  check_sigma(sigma);
  const double s = sigma * sigma;
  const double stationary = 8.0 * s * s / ((2.0 * s + 1.0) * (2.0 * s + 1.0));
  return std::max(1.0, stationary);
}

double max_average_fidelity(double sigma) {
  check_sigma(sigma);
  const double s = sigma * sigma;
  const double junction = 0.5 + 1.0 / std::numbers::sqrt2;
  if (s >= junction) {
    return (4.0 * s + 2.0) / (6.0 * s + 1.0);
  }
  return 1.0 / ((3.0 - 2.0 * std::numbers::sqrt2) * s + 1.0);
}

}  // namespace gaussclone
