#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gaussclone/symmetric_cloner.hpp"
#include "gaussclone/teleportation.hpp"

using namespace gaussclone;

namespace {
constexpr double kJunctionSigmaSq = 0.5 + std::numbers::sqrt2 / 2.0;
}

TEST_SUITE("teleportation") {

TEST_CASE("teleportation fidelity closed form") {
  // lambda = 1/2, sigma^2 = 9: (1 + 13.5) / (1 + 18) = 14.5 / 19.
  CHECK(tele_fidelity(0.5, 3.0) ==
        doctest::Approx(14.5 / 19.0).epsilon(1e-14));
  CHECK(tele_fidelity(TeleportationParams{0.5, 3.0}) ==
        tele_fidelity(0.5, 3.0));

  // Unit-fidelity limit as the resource squeezing diverges.
  CHECK(tele_fidelity(1.0 - 1e-12, 1.0) == doctest::Approx(1.0).epsilon(1e-9));

  // Classical limit: no resource and a broad ensemble gives 1/2.
  CHECK(tele_fidelity(0.0, 1000.0) == doctest::Approx(0.5).epsilon(1e-6));

  // Any input is teleported perfectly when sigma = 0 (only the mean matters).
  CHECK(tele_fidelity(0.3, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

  // Fidelity grows with the resource squeezing.
  double previous = 0.0;
  for (double lambda = 0.0; lambda < 1.0; lambda += 0.05) {
    const double value = tele_fidelity(lambda, 2.0);
    CHECK(value > previous);
    previous = value;
  }

  CHECK_THROWS_AS(tele_fidelity(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tele_fidelity(-0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(tele_fidelity(0.5, -1.0), std::domain_error);
}

TEST_CASE("no-cloning squeezing threshold at the ensemble edges") {
  // Narrow-ensemble limit is exactly 1/sqrt(2).
  CHECK(std::abs(nocloning_lambda(0.0) - 1.0 / std::numbers::sqrt2) < 1e-12);
  CHECK(std::abs(nocloning_lambda_bisect(0.0) - 1.0 / std::numbers::sqrt2) <
        1e-10);

  // Broad-ensemble limit approaches 1/3 from above.
  const double broad = nocloning_lambda(1000.0);
  CHECK(broad > 1.0 / 3.0);
  CHECK(std::abs(broad - 1.0 / 3.0) < 1e-5);
}

TEST_CASE("no-cloning threshold: closed form against bisection") {
  for (int i = 1; i <= 100; ++i) {
    const double sigma = 0.2 * i;
    CAPTURE(sigma);
    CHECK(std::abs(nocloning_lambda(sigma) - nocloning_lambda_bisect(sigma)) <
          1e-8);
  }
}

TEST_CASE("no-cloning threshold satisfies its defining equation") {
  for (int i = 0; i <= 100; ++i) {
    const double sigma = 0.2 * i;
    const double lambda = nocloning_lambda(sigma);
    CAPTURE(sigma);
    CHECK(std::abs(tele_fidelity(lambda, sigma) -
                   max_average_fidelity(sigma)) < 1e-9);
  }
}

TEST_CASE("no-cloning threshold branches agree at the junction width") {
  const double sigma_j = std::sqrt(kJunctionSigmaSq);
  const double below = nocloning_lambda(sigma_j * (1.0 - 1e-9));
  const double above = nocloning_lambda(sigma_j * (1.0 + 1e-9));
  CHECK(std::abs(below - above) < 1e-7);
  CHECK(nocloning_lambda(sigma_j) == doctest::Approx(0.51140).epsilon(2e-5));
}

TEST_CASE("no-cloning threshold decreases with the ensemble width") {
  double previous = 1.0;
  for (double sigma = 0.0; sigma <= 30.0; sigma += 0.5) {
    const double value = nocloning_lambda(sigma);
    CHECK(value < previous);
    CHECK(value > 1.0 / 3.0);
    previous = value;
  }
}

TEST_CASE("threshold values for width-3 and variance-3 ensembles differ") {
  // The two common parameterizations (sigma vs sigma^2) give distinct
  // thresholds; both are frozen here.
  CHECK(nocloning_lambda(3.0) == doctest::Approx(0.355188).epsilon(5e-6));
  CHECK(nocloning_lambda(std::sqrt(3.0)) ==
        doctest::Approx(0.400521).epsilon(5e-6));
}

TEST_CASE("decibel conversions") {
  // lambda = 1/3 squeezes the joint variance by a factor 2: -3.01 dB.
  CHECK(squeezing_db(1.0 / 3.0) ==
        doctest::Approx(-10.0 * std::log10(2.0)).epsilon(1e-14));
  // lambda = 1/sqrt(2): ratio (1 - lambda)/(1 + lambda) = 3 - 2 sqrt(2).
  const double at_threshold = squeezing_db(1.0 / std::numbers::sqrt2);
  CHECK(at_threshold ==
        doctest::Approx(10.0 * std::log10(3.0 - 2.0 * std::numbers::sqrt2))
            .epsilon(1e-14));
  CHECK(at_threshold == doctest::Approx(-7.6555).epsilon(2e-4));
  CHECK(squeezing_db(0.0) == 0.0);

  CHECK(variance_db(3.0) == doctest::Approx(10.0 * std::log10(9.0))
                                .epsilon(1e-14));
  CHECK(variance_db(1.0) == 0.0);
  CHECK_THROWS_AS(variance_db(0.0), std::domain_error);
  CHECK_THROWS_AS(variance_db(-2.0), std::domain_error);
}

TEST_CASE("crossing scan at moderate squeezing") {
  const std::vector<double> grid{0.8, 3.0};
  const auto points = crossing_scan(0.5, grid);
  REQUIRE(points.size() == 2);

  CHECK(points[0].sigma == 0.8);
  CHECK(points[0].tele_f == doctest::Approx(1.96 / 2.28).epsilon(1e-12));
  CHECK(points[0].noclone_f == doctest::Approx(0.901057).epsilon(1e-6));
  CHECK_FALSE(points[0].above);

  CHECK(points[1].tele_f == doctest::Approx(14.5 / 19.0).epsilon(1e-12));
  CHECK(points[1].noclone_f == doctest::Approx(38.0 / 55.0).epsilon(1e-12));
  CHECK(points[1].above);
}

TEST_CASE("threshold squeezing clears the bound everywhere") {
  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back(10.0 * i / 200.0);
  const auto points = crossing_scan(1.0 / std::numbers::sqrt2, grid);
  for (const CrossingPoint& point : points) {
    CAPTURE(point.sigma);
    CHECK(point.above);
  }
}

TEST_CASE("crossing scan validates its grid") {
  CHECK_THROWS_AS(crossing_scan(0.5, {}), std::invalid_argument);
  CHECK_THROWS_AS(crossing_scan(0.5, {2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(crossing_scan(1.0, {1.0}), std::domain_error);
}

}  // TEST_SUITE
