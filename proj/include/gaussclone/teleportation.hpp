#pragma once

#include <vector>

namespace gaussclone {

/// Teleporter driven by a two-mode squeezed resource of parameter
/// 0 <= lambda < 1, benchmarked against coherent inputs drawn from a
/// symmetric Gaussian ensemble of width sigma.
struct TeleportationParams {
  double lambda = 0.0;
  double sigma = 1.0;
};

/// Ensemble-averaged teleportation fidelity:
///   F = (1 - 2 (lambda^2 - 1) sigma^2) / (1 - 4 (lambda - 1) sigma^2).
/// lambda = 0 reproduces the classical measure-and-resend limit, which tends
/// to 1/2 for broad ensembles.
double tele_fidelity(const TeleportationParams& params);
double tele_fidelity(double lambda, double sigma);

/// Squeezing parameter at which teleportation exactly matches the best
/// 1-to-2 cloner, i.e. the root of tele_fidelity(lambda, sigma) =
/// max_average_fidelity(sigma). Decreases from 1/sqrt(2) at sigma = 0
/// toward 1/3 for broad ensembles. For sigma^2 >= 1/2 + 1/sqrt(2) this is
/// the smaller root of
///   2 s (6s + 1) lambda^2 - 8 s (2s + 1) lambda + (2s + 1)^2 = 0,  s = sigma^2,
/// evaluated in the cancellation-free form 2C / (B + sqrt(B^2 - 4AC)); below
/// that the gain-1 branch of the cloner bound applies and the root is
///   ((6 + 4 sqrt 2) - sqrt 2 sqrt(3 + 2 sqrt 2 + s + 2 s^2)) / (6 + 4 sqrt 2 + 2 s).
double nocloning_lambda(double sigma);

/// Same root located by bisection on the defining equation; at sigma = 0 the
/// equation degenerates (both sides -> 1) and the sigma -> 0 limit equation
/// 2 (1 - lambda)^2 = 3 - 2 sqrt(2) is bisected instead.
double nocloning_lambda_bisect(double sigma);

/// Resource squeezing in decibels: 10 log10((1 - lambda) / (1 + lambda)),
/// the variance reduction of the squeezed joint quadratures.
double squeezing_db(double lambda);

/// Ensemble variance in decibels: 10 log10(sigma^2); requires sigma > 0.
double variance_db(double sigma);

struct CrossingPoint {
  double sigma = 0.0;
  double tele_f = 0.0;
  double noclone_f = 0.0;
  bool above = false;  // teleportation matches or beats the cloning bound
};

/// Teleportation-vs-cloning comparison at fixed lambda over an ascending
/// sigma grid.
std::vector<CrossingPoint> crossing_scan(double lambda,
                                         const std::vector<double>& sigmas);

}  // namespace gaussclone
