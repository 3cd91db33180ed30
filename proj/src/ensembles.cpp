#include "gaussclone/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gaussclone/numerics.hpp"

namespace gaussclone {

namespace {

void check_sigmas(const GaussianEnsemble& ensemble, bool strict,
                  const char* where) {
  const bool ok = strict
                      ? ensemble.sigma_x > 0.0 && ensemble.sigma_y > 0.0
                      : ensemble.sigma_x >= 0.0 && ensemble.sigma_y >= 0.0;
  if (!ok || !std::isfinite(ensemble.sigma_x) ||
      !std::isfinite(ensemble.sigma_y)) {
    throw std::domain_error(std::string(where) + ": invalid sigma");
  }
}

// Chunked sampler that tolerates degenerate (sigma = 0) axes; chunk c of
// amplitudes comes from substream(seed, c), two deviates per amplitude.
void fill_samples(const GaussianEnsemble& ensemble, std::int64_t n,
                  std::uint64_t seed, std::vector<Amplitude>& out) {
  out.resize(static_cast<std::size_t>(n));
  const std::int64_t n_chunks = (n + kMonteCarloChunk - 1) / kMonteCarloChunk;
  for_each_chunk(n_chunks, [&](std::int64_t c) {
    NormalStream stream = NormalStream::substream(seed, c);
    const std::int64_t begin = c * kMonteCarloChunk;
    const std::int64_t end = std::min(n, begin + kMonteCarloChunk);
    for (std::int64_t i = begin; i < end; ++i) {
      const double zx = stream.next();
      const double zy = stream.next();
      out[static_cast<std::size_t>(i)] =
          Amplitude(ensemble.mean_x + ensemble.sigma_x * zx,
                    ensemble.mean_y + ensemble.sigma_y * zy);
    }
  });
}

struct ChunkMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

EnsembleAverage monte_carlo_average(const std::function<double(Amplitude)>& f,
                                    const GaussianEnsemble& ensemble,
                                    std::int64_t n, std::uint64_t seed) {
  const std::int64_t n_chunks = (n + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<ChunkMoments> partials(static_cast<std::size_t>(n_chunks));
  for_each_chunk(n_chunks, [&](std::int64_t c) {
    NormalStream stream = NormalStream::substream(seed, c);
    const std::int64_t begin = c * kMonteCarloChunk;
    const std::int64_t end = std::min(n, begin + kMonteCarloChunk);
    long double sum = 0.0L;
    long double sum_sq = 0.0L;
    for (std::int64_t i = begin; i < end; ++i) {
      const double zx = stream.next();
      const double zy = stream.next();
      const double value = f(Amplitude(ensemble.mean_x + ensemble.sigma_x * zx,
                                       ensemble.mean_y + ensemble.sigma_y * zy));
      sum += value;
      sum_sq += static_cast<long double>(value) * value;
    }
    partials[static_cast<std::size_t>(c)] = {static_cast<double>(sum),
                                             static_cast<double>(sum_sq)};
  });

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const ChunkMoments& part : partials) {
    sum += part.sum;
    sum_sq += part.sum_sq;
  }
  EnsembleAverage result;
  result.method = AverageMethod::monte_carlo;
  result.n_evaluations = n;
  result.value = sum / static_cast<double>(n);
  if (n > 1) {
    const double variance =
        std::max(0.0, (sum_sq - sum * result.value) /
                          static_cast<double>(n - 1));
    result.std_error = std::sqrt(variance / static_cast<double>(n));
  }
  return result;
}

}  // namespace

double density(const GaussianEnsemble& ensemble, Amplitude alpha) {
  check_sigmas(ensemble, /*strict=*/true, "density");
  const double dx = (alpha.real() - ensemble.mean_x) / ensemble.sigma_x;
  const double dy = (alpha.imag() - ensemble.mean_y) / ensemble.sigma_y;
  return std::exp(-0.5 * (dx * dx + dy * dy)) /
         (2.0 * std::numbers::pi * ensemble.sigma_x * ensemble.sigma_y);
}

std::vector<Amplitude> sample(const GaussianEnsemble& ensemble,
                              std::int64_t n, std::uint64_t seed) {
  check_sigmas(ensemble, /*strict=*/true, "sample");
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  std::vector<Amplitude> out;
  fill_samples(ensemble, n, seed, out);
  return out;
}

EnsembleAverage average(const std::function<double(Amplitude)>& f,
                        const GaussianEnsemble& ensemble,
                        AverageMethod method, std::int64_t budget,
                        std::uint64_t seed) {
  if (!f) throw std::invalid_argument("average: f must be callable");
  check_sigmas(ensemble, /*strict=*/false, "average");
  if (budget < 1) throw std::invalid_argument("average: budget must be >= 1");
  if (method == AverageMethod::closed) {
    throw std::invalid_argument(
        "average: closed-form averages are computed by their own routines");
  }

  // A zero-width prior is a point mass; the average is f at the mean.
  if (ensemble.sigma_x == 0.0 && ensemble.sigma_y == 0.0) {
    EnsembleAverage result;
    result.method = method;
    result.value = f(Amplitude(ensemble.mean_x, ensemble.mean_y));
    result.n_evaluations = 1;
    return result;
  }

  if (method == AverageMethod::monte_carlo) {
    return monte_carlo_average(f, ensemble, budget, seed);
  }

  // Tensor Gauss-Hermite: substituting alpha = mean + sqrt(2) sigma t turns
  // each normal average into int exp(-t^2) f(...) dt / sqrt(pi).
  const QuadratureRule rule = gauss_hermite(static_cast<int>(budget));
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  std::vector<double> x_nodes, x_weights, y_nodes, y_weights;
  auto fill_axis = [&](double mean, double sigma, std::vector<double>& nodes,
                       std::vector<double>& weights) {
    if (sigma == 0.0) {
      nodes = {mean};
      weights = {1.0};
      return;
    }
    nodes.resize(static_cast<std::size_t>(rule.nodes.size()));
    weights.resize(nodes.size());
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
      nodes[static_cast<std::size_t>(i)] =
          mean + std::numbers::sqrt2 * sigma * rule.nodes[i];
      weights[static_cast<std::size_t>(i)] = rule.weights[i] * inv_sqrt_pi;
    }
  };
  fill_axis(ensemble.mean_x, ensemble.sigma_x, x_nodes, x_weights);
  fill_axis(ensemble.mean_y, ensemble.sigma_y, y_nodes, y_weights);

  EnsembleAverage result;
  result.method = AverageMethod::quadrature;
  double total = 0.0;
  for (std::size_t i = 0; i < x_nodes.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < y_nodes.size(); ++j) {
      row += y_weights[j] * f(Amplitude(x_nodes[i], y_nodes[j]));
    }
    total += x_weights[i] * row;
  }
  result.value = total;
  result.n_evaluations =
      static_cast<std::int64_t>(x_nodes.size() * y_nodes.size());
  return result;
}

}  // namespace gaussclone
