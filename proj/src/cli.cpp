#include "gaussclone/cli.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

#include "gaussclone/estimation.hpp"
#include "gaussclone/numerics.hpp"
#include "gaussclone/single_quad_cloner.hpp"
#include "gaussclone/symmetric_cloner.hpp"
#include "gaussclone/teleportation.hpp"

namespace gaussclone::cli {

namespace {

constexpr int kQuadratureOrder = 40;

bool grid_ok(const RunConfig& config) {
  return config.steps >= 2 && config.sigma_min >= 0.0 &&
         config.sigma_min < config.sigma_max &&
         std::isfinite(config.sigma_max);
}

bool precision_ok(const RunConfig& config) {
  return config.precision >= 6 && config.precision <= 17;
}

bool v_grid_ok(const RunConfig& config) {
  return config.steps >= 2 && config.v_min > 0.0 &&
         config.v_min < config.v_max && std::isfinite(config.v_max);
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * i / static_cast<double>(steps - 1);
  }
  return grid;
}

std::vector<double> logspace(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        std::exp(log_lo + (log_hi - log_lo) * i /
                              static_cast<double>(steps - 1));
  }
  return grid;
}

void write_row(std::ostream& csv, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) csv << ',';
    csv << fields[i];
  }
  csv << '\n';
}

}  // namespace

std::string format_double(double value, int precision) {
  char buffer[64];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value,
                    std::chars_format::general, precision);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

int cmd_fbar(const RunConfig& config, std::ostream& csv, std::ostream& log) {
  if (!grid_ok(config) || !precision_ok(config)) {
    log << "fbar: invalid grid or precision\n";
    return kExitUsageError;
  }
  write_row(csv, {"sigma", "optimal_G", "fbar_closed", "fbar_numeric",
                  "abs_diff"});
  bool ok = true;
  for (double sigma : linspace(config.sigma_min, config.sigma_max,
                               config.steps)) {
    const double gain = optimal_gain(sigma);
    const double closed = max_average_fidelity(sigma);
    const double numeric =
        average_fidelity({gain}, sigma, AverageMethod::quadrature,
                         kQuadratureOrder)
            .value;
    const double diff = std::abs(closed - numeric);
    if (diff > 1e-6) {
      ok = false;
      log << "fbar: closed/quadrature disagreement " << diff << " at sigma "
          << sigma << "\n";
    }
    write_row(csv, {format_double(sigma, config.precision),
                    format_double(gain, config.precision),
                    format_double(closed, config.precision),
                    format_double(numeric, config.precision),
                    format_double(diff, config.precision)});
  }
  return ok ? kExitSuccess : kExitValidationFailure;
}

int cmd_noclone(const RunConfig& config, std::ostream& csv,
                std::ostream& log) {
  if (!grid_ok(config) || !precision_ok(config)) {
    log << "noclone: invalid grid or precision\n";
    return kExitUsageError;
  }
  write_row(csv, {"sigma", "lambda_closed", "lambda_bisect", "squeezing_dB",
                  "variance_dB"});
  bool ok = true;
  for (double sigma : linspace(config.sigma_min, config.sigma_max,
                               config.steps)) {
    const double closed = nocloning_lambda(sigma);
    const double bisect = nocloning_lambda_bisect(sigma);
    if (std::abs(closed - bisect) >= 1e-8) {
      ok = false;
      log << "noclone: closed/bisection disagreement at sigma " << sigma
          << "\n";
    }
    const double var_db =
        sigma > 0.0 ? variance_db(sigma)
                    : -std::numeric_limits<double>::infinity();
    write_row(csv, {format_double(sigma, config.precision),
                    format_double(closed, config.precision),
                    format_double(bisect, config.precision),
                    format_double(squeezing_db(closed), config.precision),
                    format_double(var_db, config.precision)});
  }
  return ok ? kExitSuccess : kExitValidationFailure;
}

int cmd_tele(const RunConfig& config, std::ostream& csv, std::ostream& log) {
  if (!grid_ok(config) || !precision_ok(config) ||
      !(config.lambda >= 0.0 && config.lambda < 1.0)) {
    log << "tele: invalid grid, precision, or lambda\n";
    return kExitUsageError;
  }
  write_row(csv, {"sigma", "tele_F", "noclone_F", "above"});
  bool ok = true;
  const auto grid = linspace(config.sigma_min, config.sigma_max, config.steps);
  const auto points = crossing_scan(config.lambda, grid);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const CrossingPoint& point = points[i];
    // Spot-check the cloning bound against a fresh numeric maximization.
    if (i % 20 == 0) {
      const OptimizationResult brute = maximize_scalar(
          [&point](double gain) {
            return average_fidelity({gain}, point.sigma,
                                    AverageMethod::quadrature,
                                    kQuadratureOrder)
                .value;
          },
          1.0, std::max(6.0, 4.0 * point.sigma * point.sigma), 1e-10);
      if (std::abs(brute.value - point.noclone_f) > 1e-6) {
        ok = false;
        log << "tele: cloning bound disagreement at sigma " << point.sigma
            << "\n";
      }
    }
    write_row(csv, {format_double(point.sigma, config.precision),
                    format_double(point.tele_f, config.precision),
                    format_double(point.noclone_f, config.precision),
                    point.above ? "1" : "0"});
  }
  return ok ? kExitSuccess : kExitValidationFailure;
}

int cmd_singlequad(const RunConfig& config, std::ostream& csv,
                   std::ostream& log) {
  if (!v_grid_ok(config) || !precision_ok(config)) {
    log << "singlequad: invalid grid or precision\n";
    return kExitUsageError;
  }
  write_row(csv, {"v_plus", "fidelity", "snr_plus", "duan_value", "sum_snr"});
  bool ok = true;
  const double h = opo_unity_gain();
  for (double v_plus : logspace(config.v_min, config.v_max, config.steps)) {
    const LineClonerConfig cloner{h, v_plus};
    const double closed = fidelity_line(v_plus);
    const GaussianStateXd state = clone_line_state(1.0, cloner);
    const double circuit = fidelity_vs_coherent(Amplitude(1.0, 0.0), state, 0);
    const double sum_snr = sum_snr_transfer(cloner);
    if (std::abs(closed - circuit) > 1e-9 || std::abs(sum_snr - 1.0) > 1e-9) {
      ok = false;
      log << "singlequad: circuit disagreement at v_plus " << v_plus << "\n";
    }
    write_row(csv,
              {format_double(v_plus, config.precision),
               format_double(closed, config.precision),
               format_double(snr_plus(v_plus), config.precision),
               format_double(duan_value(two_clone_covariance(state)),
                             config.precision),
               format_double(sum_snr, config.precision)});
  }
  const OptimalSqueeze best = optimal_vsqz();
  const OptimizationResult check = maximize_scalar(
      [](double v) { return fidelity_line(v); }, 0.05, 10.0, 1e-10);
  if (std::abs(check.argmax - best.v_plus) > 1e-6 ||
      std::abs(check.value - best.f_max) > 1e-9) {
    ok = false;
    log << "singlequad: optimum disagreement\n";
  }
  log << "optimal v_plus = " << format_double(best.v_plus, config.precision)
      << "\n";
  log << "F_max = " << format_double(best.f_max, config.precision) << "\n";
  log << "H = " << format_double(h, config.precision) << "\n";
  return ok ? kExitSuccess : kExitValidationFailure;
}

int cmd_estimate(const RunConfig& config, std::ostream& csv,
                 std::ostream& log) {
  if (!grid_ok(config) || !precision_ok(config) || config.samples < 1000) {
    log << "estimate: invalid grid, precision, or sample count\n";
    return kExitUsageError;
  }
  write_row(csv, {"sigma", "mse_bayes", "mse_naive", "mse_theory", "z_score"});
  bool ok = true;
  const auto grid = linspace(config.sigma_min, config.sigma_max, config.steps);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double sigma = grid[i];
    const std::uint64_t row_seed = config.seed + i;
    const MseEstimate bayes = estimator_mse_detail(
        DualHomodyneEstimator::bayes, sigma, config.samples, row_seed);
    const MseEstimate naive = estimator_mse_detail(
        DualHomodyneEstimator::unshrunk, sigma, config.samples, row_seed);
    const double s = sigma * sigma;
    const double theory = s / (2.0 * s + 1.0);
    const double z = bayes.std_error > 0.0
                         ? (bayes.mse - theory) / bayes.std_error
                         : 0.0;
    if (std::abs(z) > 4.0) {
      ok = false;
      log << "estimate: z-score " << z << " at sigma " << sigma << "\n";
    }
    write_row(csv, {format_double(sigma, config.precision),
                    format_double(bayes.mse, config.precision),
                    format_double(naive.mse, config.precision),
                    format_double(theory, config.precision),
                    format_double(z, config.precision)});
  }
  return ok ? kExitSuccess : kExitValidationFailure;
}

}  // namespace gaussclone::cli
