#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gaussclone::cli {

/// Options shared by the CSV-emitting subcommands. Every command writes a
/// header row plus one row per grid point, '.' decimal separator, ','
/// delimiter, LF line endings; identical configs give byte-identical output.
struct RunConfig {
  double sigma_min = 0.0;
  double sigma_max = 10.0;
  int steps = 201;
  double v_min = 0.2;  // singlequad squeezing grid, log spaced, v_min > 0
  double v_max = 5.0;
  double lambda = 0.5;
  std::uint64_t seed = 1;
  std::int64_t samples = 100000;
  int precision = 12;  // significant digits, in [6, 17]
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsageError = 2;

/// Optimal-gain average fidelity over a sigma grid; columns sigma,
/// optimal_G, fbar_closed, fbar_numeric, abs_diff. Fails (exit 1) if any
/// closed/quadrature disagreement exceeds 1e-6.
int cmd_fbar(const RunConfig& config, std::ostream& csv, std::ostream& log);

/// No-cloning squeezing threshold over a sigma grid; columns sigma,
/// lambda_closed, lambda_bisect, squeezing_dB, variance_dB. Fails if the
/// closed form and the bisection root differ by 1e-8 or more.
int cmd_noclone(const RunConfig& config, std::ostream& csv,
                std::ostream& log);

/// Teleportation-vs-cloning comparison at fixed lambda; columns sigma,
/// tele_F, noclone_F, above. Fails if the cloning bound disagrees with an
/// independent numeric maximization on sampled rows.
int cmd_tele(const RunConfig& config, std::ostream& csv, std::ostream& log);

/// Line-cloner figures over a log-spaced v_plus grid in [v_min, v_max];
/// columns v_plus, fidelity, snr_plus, duan_value, sum_snr, plus a summary
/// block (optimal v_plus, F_max, H) on the log stream. Fails if the
/// closed-form fidelity disagrees with the composed circuit.
int cmd_singlequad(const RunConfig& config, std::ostream& csv,
                   std::ostream& log);

/// Monte Carlo estimator benchmarks over a sigma grid; columns sigma,
/// mse_bayes, mse_naive, mse_theory, z_score. Fails if any |z| exceeds 4.
int cmd_estimate(const RunConfig& config, std::ostream& csv,
                 std::ostream& log);

/// Locale-independent significant-digit formatting used for all CSV fields.
std::string format_double(double value, int precision);

}  // namespace gaussclone::cli
