#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include <Eigen/Dense>

namespace gaussclone {

/// 64-bit finalizer used for seeding engines and deriving substreams.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic stream of standard normal deviates.
///
/// Uniform bits come from std::mt19937_64 (output sequence fixed by the C++
/// standard) seeded with splitmix64(seed); deviates are produced with the
/// Marsaglia polar method. Substreams for chunked or parallel generation are
/// derived by reseeding with a fixed affine mix of (seed, index), so results
/// are reproducible for a given seed on any platform with IEEE doubles.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static NormalStream substream(std::uint64_t seed, std::uint64_t index) {
    return NormalStream(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  }

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0, v = 0.0, s = 0.0;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
  }

  /// Uniform deviate in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Number of samples drawn from one substream before moving to the next.
/// Fixing the chunk size makes Monte Carlo results independent of how many
/// workers process the chunks.
inline constexpr std::int64_t kMonteCarloChunk = 8192;

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Hermite rule for integrals of the form int exp(-t^2) f(t) dt.
/// Nodes are symmetric about zero; weights are positive and sum to sqrt(pi).
QuadratureRule gauss_hermite(int order);

struct OptimizationResult {
  double argmax = 0.0;
  double value = 0.0;
  int iterations = 0;
  double tolerance_achieved = 0.0;
};

namespace detail {

// Three-point parabolic refinement around a golden-section argmax. Improves
// the argmax beyond the sqrt(eps) comparison limit when the maximum is
// interior and locally quadratic; skipped near the bracket ends.
template <typename F>
void parabolic_polish(F& f, double lo, double hi, OptimizationResult& result) {
  const double h = 1e-5 * (1.0 + std::abs(result.argmax));
  const double xl = result.argmax - h;
  const double xr = result.argmax + h;
  if (!(xl > lo && xr < hi)) return;
  const double fl = f(xl);
  const double fm = f(result.argmax);
  const double fr = f(xr);
  const double curvature = fl - 2.0 * fm + fr;
  if (!(curvature < 0.0)) return;
  const double vertex = result.argmax + 0.5 * h * (fl - fr) / curvature;
  if (!(vertex > lo && vertex < hi) || std::abs(vertex - result.argmax) > h) {
    return;
  }
  const double fv = f(vertex);
  if (fv >= fm) {
    result.argmax = vertex;
    result.value = fv;
  } else {
    result.value = fm;
  }
}

}  // namespace detail

/// Golden-section maximization of a unimodal function on [lo, hi], followed
/// by a parabolic refinement of the argmax. The bracket never leaves
/// [lo, hi]; boundary maxima are returned at the boundary.
template <typename F>
OptimizationResult maximize_scalar(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi) || !(tol > 0.0)) {
    throw std::invalid_argument("maximize_scalar: invalid bracket");
  }
  constexpr double kInvGolden = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - kInvGolden * (b - a);
  double x2 = a + kInvGolden * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  OptimizationResult result;
  while (b - a > tol && result.iterations < 400) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvGolden * (b - a);
      f1 = f(x1);
    }
    ++result.iterations;
  }
  result.tolerance_achieved = b - a;
  if (f1 > f2) {
    result.argmax = x1;
    result.value = f1;
  } else {
    result.argmax = x2;
    result.value = f2;
  }
  detail::parabolic_polish(f, lo, hi, result);
  return result;
}

/// Bisection root finder; requires a sign change on [lo, hi].
template <typename F>
double find_root(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi) || !(tol > 0.0)) {
    throw std::invalid_argument("find_root: invalid bracket");
  }
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("find_root: no sign change on bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // hit double resolution
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (fhi > 0.0)) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Worker cap for chunked loops: GAUSSCLONE_THREADS when set, otherwise a
/// small multiple of the hardware concurrency.
int worker_count();

/// Runs fn(chunk_index) for chunk_index in [0, n_chunks). Chunks may execute
/// on several threads; callers must write results into per-chunk slots so the
/// final reduction order (0, 1, ..., n_chunks-1) is fixed.
template <typename Fn>
void for_each_chunk(std::int64_t n_chunks, Fn&& fn) {
  const int workers =
      static_cast<int>(std::min<std::int64_t>(worker_count(), n_chunks));
  if (workers <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::int64_t c = t; c < n_chunks; c += workers) fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gaussclone
