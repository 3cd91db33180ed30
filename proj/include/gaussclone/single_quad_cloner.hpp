#pragma once

#include "gaussclone/phase_space.hpp"

namespace gaussclone {

/// 1-to-2 cloner specialized to states lying on the X+ line (alpha real):
/// a phase-sensitive amplifier (OPO) of gain H followed by a balanced beam
/// splitter whose idle port carries squeezed vacuum with X+ variance v_plus.
struct LineClonerConfig {
  double opo_gain = 9.0 / 8.0;
  double v_plus = 1.0;
};

/// Mean and covariance of the two clones, quadratures ordered
/// (X+_1, X-_1, X+_2, X-_2).
struct TwoCloneCovariance {
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Matrix4d cov = Eigen::Matrix4d::Identity();
};

/// OPO gain giving unit amplitude gain per clone, the root of
/// (sqrt(H) + sqrt(H - 1)) / sqrt(2) = 1: exactly 9/8.
double opo_unity_gain();

/// Two-mode output state of the line cloner applied to |alpha_x> (real
/// amplitude).
GaussianStateXd clone_line_state(double alpha_x,
                                 const LineClonerConfig& config);

/// Equivalent construction with a plain vacuum idle port and one OPO in each
/// output arm; reproduces clone_line_state exactly.
GaussianStateXd clone_line_state_two_opo(double alpha_x,
                                         const LineClonerConfig& config);

TwoCloneCovariance clone_line(double alpha_x, const LineClonerConfig& config);

/// View of a two-mode state as a clone pair.
TwoCloneCovariance two_clone_covariance(const GaussianStateXd& state);

/// Fidelity of one unity-gain clone (H = 9/8) against the line target, as a
/// function of the squeezed-port variance:
///   F = 2 / sqrt((5/4 + 1/(2 v)) (2 + v/2)).
double fidelity_line(double v_plus);

struct OptimalSqueeze {
  double v_plus = 0.0;
  double f_max = 0.0;
};

/// Squeezing that maximizes fidelity_line: v_plus = sqrt(8/5) with
/// F = (4/9)(sqrt(10) - 1).
OptimalSqueeze optimal_vsqz();

/// X+ SNR transfer of one unity-gain clone: 2 / (2 + v_plus).
double snr_plus(double v_plus);

/// SNR transfer of the summed X+ of both clones; the squeezed port cancels
/// in the sum, so this is 1 for every configuration.
double sum_snr_transfer(const LineClonerConfig& config);

/// Inseparability witness V((X+_1 - X+_2)/sqrt 2) + V((X-_1 + X-_2)/sqrt 2);
/// values below 2 certify entanglement of the clone pair.
double duan_value(const TwoCloneCovariance& clones);

/// Ensemble-averaged clone fidelity for amplitudes on the X+ line with
/// alpha_x ~ N(0, sigma_x^2), by Gauss-Hermite quadrature.
double line_average_fidelity(const LineClonerConfig& config, double sigma_x,
                             int quad_order = 40);

struct SweepOptions {
  double h_min = 1.0;
  double h_max = 4.0;
  double v_min = 0.05;  // v_plus grid is log-spaced on (0, v_max]
  double v_max = 10.0;
  int h_steps = 61;
  int v_steps = 61;
  double sigma_x = 1000.0;  // broad-line ensemble width
  int quad_order = 40;
  double refine_tol = 1e-8;
};

struct SweepResult {
  double opo_gain = 0.0;
  double v_plus = 0.0;
  double fidelity = 0.0;
};

/// Grid search plus coordinate refinement of the line-averaged fidelity over
/// (H, v_plus); the optimum sits at (9/8, sqrt(8/5)) with fidelity
/// (4/9)(sqrt(10) - 1) up to O(1/sigma_x^2).
SweepResult parameter_sweep(const SweepOptions& options = {});

}  // namespace gaussclone
