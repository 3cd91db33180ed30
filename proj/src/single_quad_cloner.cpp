#include "gaussclone/single_quad_cloner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gaussclone/ensembles.hpp"
#include "gaussclone/numerics.hpp"

namespace gaussclone {

namespace {

void check_config(const LineClonerConfig& config) {
  if (!(config.opo_gain >= 1.0) || !std::isfinite(config.opo_gain)) {
    throw std::domain_error("line cloner: OPO gain must be >= 1");
  }
  if (!(config.v_plus > 0.0) || !std::isfinite(config.v_plus)) {
    throw std::domain_error("line cloner: v_plus must be > 0");
  }
}

void check_v_plus(double v_plus) {
  if (!(v_plus > 0.0) || !std::isfinite(v_plus)) {
    throw std::domain_error("line cloner: v_plus must be > 0");
  }
}

}  // namespace

double opo_unity_gain() { return 9.0 / 8.0; }

GaussianStateXd clone_line_state(double alpha_x,
                                 const LineClonerConfig& config) {
  check_config(config);
  GaussianStateXd state = coherent_state(Amplitude(alpha_x, 0.0));
  state = apply_opo(state, 0, config.opo_gain);
  state = tensor(state, squeezed_vacuum(config.v_plus));
  return apply_beam_splitter(state, 0, 1, 0.5);
}

GaussianStateXd clone_line_state_two_opo(double alpha_x,
                                         const LineClonerConfig& config) {
  check_config(config);
  // Squeezing s = sqrt(v_plus) per arm commutes through the splitter: moving
  // it upstream turns the vacuum port into squeezed vacuum of variance
  // v_plus and divides the input-side squeeze by s.
  const double h = config.opo_gain;
  const double total = std::sqrt(h) + std::sqrt(h - 1.0);
  const double arm = std::sqrt(config.v_plus);
  GaussianStateXd state = coherent_state(Amplitude(alpha_x, 0.0));
  state = apply_single_mode_squeeze(state, 0, total / arm);
  state = tensor(state, vacuum_state(1));
  state = apply_beam_splitter(state, 0, 1, 0.5);
  state = apply_single_mode_squeeze(state, 0, arm);
  return apply_single_mode_squeeze(state, 1, arm);
}

TwoCloneCovariance two_clone_covariance(const GaussianStateXd& state) {
  if (state.num_modes() != 2) {
    throw std::invalid_argument("two_clone_covariance: need a two-mode state");
  }
  TwoCloneCovariance clones;
  clones.mean = state.mean();
  clones.cov = state.cov();
  return clones;
}

TwoCloneCovariance clone_line(double alpha_x, const LineClonerConfig& config) {
  return two_clone_covariance(clone_line_state(alpha_x, config));
}

double fidelity_line(double v_plus) {
  check_v_plus(v_plus);
  return 2.0 / std::sqrt((1.25 + 0.5 / v_plus) * (2.0 + 0.5 * v_plus));
}

OptimalSqueeze optimal_vsqz() {
  OptimalSqueeze best;
  best.v_plus = std::sqrt(8.0 / 5.0);
  best.f_max = (4.0 / 9.0) * (std::sqrt(10.0) - 1.0);
  return best;
}

double snr_plus(double v_plus) {
  check_v_plus(v_plus);
  return 2.0 / (2.0 + v_plus);
}

double sum_snr_transfer(const LineClonerConfig& config) {
  const GaussianStateXd state = clone_line_state(1.0, config);
  const double sum_mean = state.mean_plus(0) + state.mean_plus(1);
  const double sum_var = state.var_plus(0) + state.var_plus(1) +
                         2.0 * state.cov()(0, 2);
  const double input_snr = (2.0 * 1.0) * (2.0 * 1.0) / 1.0;
  return (sum_mean * sum_mean / sum_var) / input_snr;
}

double duan_value(const TwoCloneCovariance& clones) {
  const Eigen::Matrix4d& c = clones.cov;
  const double diff_plus = 0.5 * (c(0, 0) + c(2, 2) - 2.0 * c(0, 2));
  const double sum_minus = 0.5 * (c(1, 1) + c(3, 3) + 2.0 * c(1, 3));
  return diff_plus + sum_minus;
}

double line_average_fidelity(const LineClonerConfig& config, double sigma_x,
                             int quad_order) {
  check_config(config);
  if (!(sigma_x >= 0.0) || !std::isfinite(sigma_x)) {
    throw std::domain_error("line_average_fidelity: sigma_x must be >= 0");
  }
  const GaussianEnsemble line{sigma_x, 0.0, 0.0, 0.0};
  auto fidelity = [&config](Amplitude alpha) {
    return fidelity_vs_coherent(alpha, clone_line_state(alpha.real(), config),
                                0);
  };
  return average(fidelity, line, AverageMethod::quadrature, quad_order).value;
}

SweepResult parameter_sweep(const SweepOptions& options) {
  if (!(options.h_min >= 1.0 && options.h_min < options.h_max) ||
      !(options.v_min > 0.0 && options.v_min < options.v_max) ||
      options.h_steps < 2 || options.v_steps < 2) {
    throw std::invalid_argument("parameter_sweep: bad grid");
  }

  auto objective = [&](double h, double v) {
    return line_average_fidelity({h, v}, options.sigma_x, options.quad_order);
  };

  SweepResult best;
  std::vector<double> h_grid(static_cast<std::size_t>(options.h_steps));
  std::vector<double> v_grid(static_cast<std::size_t>(options.v_steps));
  for (int i = 0; i < options.h_steps; ++i) {
    h_grid[static_cast<std::size_t>(i)] =
        options.h_min + (options.h_max - options.h_min) * i /
                            (options.h_steps - 1);
  }
  const double log_lo = std::log(options.v_min);
  const double log_hi = std::log(options.v_max);
  for (int j = 0; j < options.v_steps; ++j) {
    v_grid[static_cast<std::size_t>(j)] =
        std::exp(log_lo + (log_hi - log_lo) * j / (options.v_steps - 1));
  }
  // Grid scan, parallel over rows; the serial argmax below makes the
  // reduction order (and any tie-breaking) independent of the worker count.
  std::vector<double> values(
      static_cast<std::size_t>(options.h_steps) *
      static_cast<std::size_t>(options.v_steps));
  for_each_chunk(options.h_steps, [&](std::int64_t i) {
    for (int j = 0; j < options.v_steps; ++j) {
      values[static_cast<std::size_t>(i) *
                 static_cast<std::size_t>(options.v_steps) +
             static_cast<std::size_t>(j)] =
          objective(h_grid[static_cast<std::size_t>(i)],
                    v_grid[static_cast<std::size_t>(j)]);
    }
  });
  int best_i = 0;
  int best_j = 0;
  best.fidelity = values[0];
  for (int i = 0; i < options.h_steps; ++i) {
    for (int j = 0; j < options.v_steps; ++j) {
      const double value = values[static_cast<std::size_t>(i) *
                                      static_cast<std::size_t>(options.v_steps) +
                                  static_cast<std::size_t>(j)];
      if (value > best.fidelity) {
        best.fidelity = value;
        best_i = i;
        best_j = j;
      }
    }
  }
  best.opo_gain = h_grid[static_cast<std::size_t>(best_i)];
  best.v_plus = v_grid[static_cast<std::size_t>(best_j)];

  // Coordinate refinement. For a broad line the average is sharply peaked
  // where the amplitude gain is 1 and underflows to zero far from that
  // ridge, so the gain search must stay within one grid cell of the scan's
  // best row (which brackets the ridge); a full-range search would compare
  // zeros and could discard the peak. Along v_plus the on-ridge average is
  // unimodal over the whole range, so that axis uses the full bracket. A
  // step is kept only if it does not lower the value, which pins the result
  // in degenerate grids where every cell underflows.
  const double h_cell =
      (options.h_max - options.h_min) / (options.h_steps - 1);
  for (int round = 0; round < 25; ++round) {
    const double h_before = best.opo_gain;
    const double v_before = best.v_plus;
    const OptimizationResult h_step = maximize_scalar(
        [&](double h) { return objective(h, best.v_plus); },
        std::max(options.h_min, best.opo_gain - h_cell),
        std::min(options.h_max, best.opo_gain + h_cell), options.refine_tol);
    if (h_step.value >= best.fidelity) {
      best.opo_gain = h_step.argmax;
      best.fidelity = h_step.value;
    }
    const OptimizationResult v_step = maximize_scalar(
        [&](double v) { return objective(best.opo_gain, v); }, options.v_min,
        options.v_max, options.refine_tol);
    if (v_step.value >= best.fidelity) {
      best.v_plus = v_step.argmax;
      best.fidelity = v_step.value;
    }
    if (std::abs(best.opo_gain - h_before) < 1e-10 &&
        std::abs(best.v_plus - v_before) < 1e-10) {
      break;
    }
  }
  return best;
}

}  // namespace gaussclone
