#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gaussclone/phase_space.hpp"

namespace gaussclone {

/// Gaussian prior over coherent amplitudes: alpha_x ~ N(mean_x, sigma_x^2)
/// independent of alpha_y ~ N(mean_y, sigma_y^2).
struct GaussianEnsemble {
  double sigma_x = 1.0;
  double sigma_y = 1.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
};

enum class AverageMethod { closed, quadrature, monte_carlo };

struct EnsembleAverage {
  double value = 0.0;
  AverageMethod method = AverageMethod::closed;
  double std_error = 0.0;  // nonzero only for monte_carlo
  std::int64_t n_evaluations = 0;
};

/// Prior density at alpha; requires sigma_x, sigma_y > 0.
double density(const GaussianEnsemble& ensemble, Amplitude alpha);

/// n amplitudes drawn from the ensemble. Deterministic for a given seed:
/// samples are generated in chunks of kMonteCarloChunk, chunk c coming from
/// NormalStream::substream(seed, c).
std::vector<Amplitude> sample(const GaussianEnsemble& ensemble,
                              std::int64_t n, std::uint64_t seed);

/// Ensemble average of f, either by tensor Gauss-Hermite quadrature (budget =
/// nodes per axis) or by Monte Carlo over sample() (budget = trials, the mean
/// is formed chunk by chunk in fixed order so any worker count gives the same
/// value). Axes with sigma = 0 are averaged exactly as point masses.
EnsembleAverage average(const std::function<double(Amplitude)>& f,
                        const GaussianEnsemble& ensemble,
                        AverageMethod method, std::int64_t budget,
                        std::uint64_t seed = 0);

}  // namespace gaussclone
