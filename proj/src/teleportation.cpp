#include "gaussclone/teleportation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaussclone/numerics.hpp"
#include "gaussclone/symmetric_cloner.hpp"

namespace gaussclone {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw std::domain_error("teleportation: lambda must lie in [0, 1)");
  }
}

void check_sigma(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("teleportation: sigma must be >= 0");
  }
}

constexpr double kJunction = 0.5 + 0.7071067811865476;  // sigma^2 where the optimal gain leaves 1

}  // namespace

double tele_fidelity(double lambda, double sigma) {
  check_lambda(lambda);
  check_sigma(sigma);
  const double s = sigma * sigma;
  return (1.0 - 2.0 * (lambda * lambda - 1.0) * s) /
         (1.0 - 4.0 * (lambda - 1.0) * s);
}

double tele_fidelity(const TeleportationParams& params) {
  return tele_fidelity(params.lambda, params.sigma);
}

double nocloning_lambda(double sigma) {
  check_sigma(sigma);
  const double s = sigma * sigma;
  if (s >= kJunction) {
    const double a = 2.0 * s * (6.0 * s + 1.0);
    const double b = 8.0 * s * (2.0 * s + 1.0);
    const double c = (2.0 * s + 1.0) * (2.0 * s + 1.0);
    const double disc = b * b - 4.0 * a * c;  // = 8 s (2s - 1) (2s + 1)^2
    return 2.0 * c / (b + std::sqrt(std::max(0.0, disc)));
  }
  const double root2 = std::numbers::sqrt2;
  const double base = 6.0 + 4.0 * root2;
  return (base - root2 * std::sqrt(3.0 + 2.0 * root2 + s + 2.0 * s * s)) /
         (base + 2.0 * s);
}

double nocloning_lambda_bisect(double sigma) {
  check_sigma(sigma);
  if (sigma == 0.0) {
    // Both fidelities tend to 1; bisect the first-order-in-sigma^2 balance.
    const double target = 3.0 - 2.0 * std::numbers::sqrt2;
    return find_root(
        [target](double lambda) {
          return 2.0 * (1.0 - lambda) * (1.0 - lambda) - target;
        },
        0.0, 1.0 - 1e-12, 1e-13);
  }
  const double bound = max_average_fidelity(sigma);
  return find_root(
      [sigma, bound](double lambda) {
        return tele_fidelity(lambda, sigma) - bound;
      },
      0.0, 1.0 - 1e-12, 1e-13);
}

double squeezing_db(double lambda) {
  check_lambda(lambda);
  return 10.0 * std::log10((1.0 - lambda) / (1.0 + lambda));
}

double variance_db(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("variance_db: sigma must be > 0");
  }
  return 10.0 * std::log10(sigma * sigma);
}

std::vector<CrossingPoint> crossing_scan(double lambda,
                                         const std::vector<double>& sigmas) {
  check_lambda(lambda);
  if (sigmas.empty()) {
    throw std::invalid_argument("crossing_scan: empty sigma grid");
  }
  std::vector<CrossingPoint> points;
  points.reserve(sigmas.size());
  double previous = -1.0;
  for (double sigma : sigmas) {
    if (sigma < previous) {
      throw std::invalid_argument("crossing_scan: grid must be ascending");
    }
    previous = sigma;
    CrossingPoint point;
    point.sigma = sigma;
    point.tele_f = tele_fidelity(lambda, sigma);
    point.noclone_f = max_average_fidelity(sigma);
    point.above = point.tele_f >= point.noclone_f;
    points.push_back(point);
  }
  return points;
}

}  // namespace gaussclone
