#pragma once

#include <cstdint>

#include "gaussclone/ensembles.hpp"
#include "gaussclone/phase_space.hpp"

namespace gaussclone {

/// 1-to-2 symmetric Gaussian cloner: a phase-insensitive amplifier of gain
/// G >= 1 followed by a balanced beam splitter against vacuum. Each clone
/// carries amplitude gain sqrt(G/2) and quadrature variances V+ = V- = G.
struct ClonerConfig {
  double gain = 2.0;
};

struct CloneReport {
  double mean_plus = 0.0;
  double mean_minus = 0.0;
  double v_plus = 0.0;
  double v_minus = 0.0;
  double amplitude_gain = 0.0;
  double fidelity = 0.0;      // overlap of the clone with |alpha>
  double snr_transfer = 0.0;  // output SNR over input SNR, per quadrature
};

/// Full two-mode output state of the cloner applied to |alpha>.
GaussianStateXd clone_pair_state(Amplitude alpha, const ClonerConfig& config);

/// Statistics of one clone of |alpha| (both output arms are identical; arm 0
/// is reported).
CloneReport clone(Amplitude alpha, const ClonerConfig& config);

/// Output-over-input SNR ratio of a clone quadrature; equals 1/2 for every
/// gain, computed from the signal and noise of a probe amplitude.
double snr_transfer(const ClonerConfig& config);

/// Fidelity of one clone averaged over the symmetric Gaussian ensemble of
/// width sigma. The closed form is the Gaussian integral of the single-state
/// fidelity against the prior:
///
///   Fbar(G, sigma) = 2 / ((1 + G) + 4 sigma^2 (1 - sqrt(G/2))^2)
///
/// method = closed evaluates that expression; quadrature and monte_carlo
/// average the circuit fidelity numerically (budget = nodes per axis or
/// trials).
EnsembleAverage average_fidelity(const ClonerConfig& config, double sigma,
                                 AverageMethod method, std::int64_t budget = 40,
                                 std::uint64_t seed = 0);

/// Gain maximizing the ensemble-averaged fidelity:
/// max(1, 8 sigma^4 / (2 sigma^2 + 1)^2); the unclamped expression reaches 1
/// at sigma^2 = 1/2 + 1/sqrt(2).
double optimal_gain(double sigma);

/// Averaged fidelity at the optimal gain:
///   (4 sigma^2 + 2) / (6 sigma^2 + 1)   for sigma^2 >= 1/2 + 1/sqrt(2)
///   1 / ((3 - 2 sqrt(2)) sigma^2 + 1)   otherwise (gain pinned at 1).
/// Decreases from 1 at sigma = 0 to 2/3 as sigma -> infinity.
double max_average_fidelity(double sigma);

}  // namespace gaussclone
