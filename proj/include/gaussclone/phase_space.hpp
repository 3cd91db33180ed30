#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace gaussclone {

/// Coherent amplitude alpha = alpha_x + i * alpha_y (dimensionless).
using Amplitude = std::complex<double>;

/// Gaussian state of n optical modes in quadrature form.
///
/// Conventions: X+ = a + a^dag, X- = -i(a - a^dag), quadratures ordered
/// (X+_1, X-_1, ..., X+_n, X-_n). In these units the vacuum covariance is
/// the identity and a coherent state |alpha> has mean (2 alpha_x, 2 alpha_y).
/// The commutator gives [X+, X-] = 2i, so physical states satisfy
/// cov + i * Omega >= 0 with Omega = diag_blocks([[0, 1], [-1, 0]]), and
/// V+ V- >= 1 per mode in the diagonal case.
template <typename Scalar = double>
class GaussianState {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  GaussianState(Vector mean, Matrix cov)
      : mean_(std::move(mean)), cov_(std::move(cov)) {
    if (mean_.size() == 0 || mean_.size() % 2 != 0) {
      throw std::invalid_argument(
          "GaussianState: mean must have 2 entries per mode");
    }
    if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
      throw std::invalid_argument(
          "GaussianState: covariance shape must match the mean");
    }
    const Scalar scale = Scalar(1) + cov_.template lpNorm<Eigen::Infinity>();
    if ((cov_ - cov_.transpose()).template lpNorm<Eigen::Infinity>() >
        Scalar(1e-12) * scale) {
      throw std::invalid_argument("GaussianState: covariance not symmetric");
    }
    cov_ = ((cov_ + cov_.transpose()) / Scalar(2)).eval();
  }

  Eigen::Index num_modes() const { return mean_.size() / 2; }
  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }

  Scalar mean_plus(Eigen::Index mode) const { return mean_[2 * mode]; }
  Scalar mean_minus(Eigen::Index mode) const { return mean_[2 * mode + 1]; }
  Scalar var_plus(Eigen::Index mode) const {
    return cov_(2 * mode, 2 * mode);
  }
  Scalar var_minus(Eigen::Index mode) const {
    return cov_(2 * mode + 1, 2 * mode + 1);
  }

 private:
  Vector mean_;
  Matrix cov_;
};

using GaussianStateXd = GaussianState<double>;

template <typename Scalar = double>
GaussianState<Scalar> vacuum_state(Eigen::Index n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("vacuum_state: need at least one mode");
  }
  using State = GaussianState<Scalar>;
  return State(State::Vector::Zero(2 * n_modes),
               State::Matrix::Identity(2 * n_modes, 2 * n_modes));
}

template <typename Scalar>
GaussianState<Scalar> coherent_state(const std::complex<Scalar>& alpha) {
  using State = GaussianState<Scalar>;
  typename State::Vector mean(2);
  mean << Scalar(2) * alpha.real(), Scalar(2) * alpha.imag();
  return State(std::move(mean), State::Matrix::Identity(2, 2));
}

/// Single-mode squeezed vacuum with quadrature variances (v_plus, 1/v_plus).
template <typename Scalar = double>
GaussianState<Scalar> squeezed_vacuum(Scalar v_plus) {
  if (!(v_plus > Scalar(0))) {
    throw std::domain_error("squeezed_vacuum: v_plus must be positive");
  }
  using State = GaussianState<Scalar>;
  typename State::Matrix cov(2, 2);
  cov << v_plus, Scalar(0), Scalar(0), Scalar(1) / v_plus;
  return State(State::Vector::Zero(2), std::move(cov));
}

template <typename Scalar>
GaussianState<Scalar> tensor(const GaussianState<Scalar>& a,
                             const GaussianState<Scalar>& b) {
  using State = GaussianState<Scalar>;
  const Eigen::Index na = a.mean().size();
  const Eigen::Index nb = b.mean().size();
  typename State::Vector mean(na + nb);
  mean << a.mean(), b.mean();
  typename State::Matrix cov = State::Matrix::Zero(na + nb, na + nb);
  cov.topLeftCorner(na, na) = a.cov();
  cov.bottomRightCorner(nb, nb) = b.cov();
  return State(std::move(mean), std::move(cov));
}

/// Marginal state of the listed modes (Gaussian partial trace).
template <typename Scalar>
GaussianState<Scalar> keep_modes(const GaussianState<Scalar>& state,
                                 const std::vector<Eigen::Index>& modes) {
  using State = GaussianState<Scalar>;
  if (modes.empty()) {
    throw std::invalid_argument("keep_modes: need at least one mode");
  }
  const Eigen::Index kept = static_cast<Eigen::Index>(modes.size());
  typename State::Vector mean(2 * kept);
  typename State::Matrix cov(2 * kept, 2 * kept);
  for (Eigen::Index i = 0; i < kept; ++i) {
    if (modes[i] < 0 || modes[i] >= state.num_modes()) {
      throw std::invalid_argument("keep_modes: mode index out of range");
    }
    mean.template segment<2>(2 * i) =
        state.mean().template segment<2>(2 * modes[i]);
    for (Eigen::Index j = 0; j < kept; ++j) {
      cov.template block<2, 2>(2 * i, 2 * j) =
          state.cov().template block<2, 2>(2 * modes[i], 2 * modes[j]);
    }
  }
  return State(std::move(mean), std::move(cov));
}

namespace detail {

template <typename Scalar>
void check_mode(const GaussianState<Scalar>& state, Eigen::Index mode,
                const char* where) {
  if (mode < 0 || mode >= state.num_modes()) {
    throw std::invalid_argument(std::string(where) +
                                ": mode index out of range");
  }
}

// Applies a 2k x 2k linear map acting on the quadratures of the listed
// modes; all other coordinates are untouched. Mean -> S mean,
// cov -> S cov S^T for the embedded S.
template <typename Scalar>
GaussianState<Scalar> apply_local_map(
    const GaussianState<Scalar>& state,
    const std::vector<Eigen::Index>& modes,
    const typename GaussianState<Scalar>::Matrix& local) {
  using State = GaussianState<Scalar>;
  const Eigen::Index dim = state.mean().size();
  const Eigen::Index k = static_cast<Eigen::Index>(modes.size());
  typename State::Matrix full = State::Matrix::Identity(dim, dim);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      full.template block<2, 2>(2 * modes[i], 2 * modes[j]) =
          local.template block<2, 2>(2 * i, 2 * j);
    }
  }
  return State(full * state.mean(),
               full * state.cov() * full.transpose());
}

}  // namespace detail

/// Pure single-mode squeeze: X+ -> scale * X+, X- -> X- / scale.
template <typename Scalar>
GaussianState<Scalar> apply_single_mode_squeeze(
    const GaussianState<Scalar>& state, Eigen::Index mode, Scalar scale) {
  detail::check_mode(state, mode, "apply_single_mode_squeeze");
  if (!(scale > Scalar(0))) {
    throw std::domain_error("apply_single_mode_squeeze: scale must be > 0");
  }
  typename GaussianState<Scalar>::Matrix local(2, 2);
  local << scale, Scalar(0), Scalar(0), Scalar(1) / scale;
  return detail::apply_local_map(state, {mode}, local);
}

/// Phase-sensitive amplifier (degenerate OPO) with gain H >= 1: amplifies
/// X+ by sqrt(H) + sqrt(H - 1) and deamplifies X- by the reciprocal, adding
/// no noise. Purity is preserved.
template <typename Scalar>
GaussianState<Scalar> apply_opo(const GaussianState<Scalar>& state,
                                Eigen::Index mode, Scalar gain) {
  detail::check_mode(state, mode, "apply_opo");
  if (!(gain >= Scalar(1))) {
    throw std::domain_error("apply_opo: gain must be >= 1");
  }
  const Scalar scale = std::sqrt(gain) + std::sqrt(gain - Scalar(1));
  return apply_single_mode_squeeze(state, mode, scale);
}

/// Phase-insensitive amplifier with gain G >= 1. Both quadrature means scale
/// by sqrt(G) and each variance maps to G * V + (G - 1): the minimal noise
/// for a phase-insensitive linear amplifier. Implemented as a two-mode
/// squeeze against an internal vacuum ancilla that is traced out.
template <typename Scalar>
GaussianState<Scalar> apply_phase_insensitive_amp(
    const GaussianState<Scalar>& state, Eigen::Index mode, Scalar gain) {
  detail::check_mode(state, mode, "apply_phase_insensitive_amp");
  if (!(gain >= Scalar(1))) {
    throw std::domain_error("apply_phase_insensitive_amp: gain must be >= 1");
  }
  const Eigen::Index n = state.num_modes();
  GaussianState<Scalar> extended = tensor(state, vacuum_state<Scalar>(1));
  const Scalar c = std::sqrt(gain);
  const Scalar s = std::sqrt(gain - Scalar(1));
  typename GaussianState<Scalar>::Matrix local(4, 4);
  const Scalar z = Scalar(0);
  local << c, z, s, z,
           z, c, z, -s,
           s, z, c, z,
           z, -s, z, c;
  extended = detail::apply_local_map(extended, {mode, n}, local);
  std::vector<Eigen::Index> keep(n);
  for (Eigen::Index i = 0; i < n; ++i) keep[i] = i;
  return keep_modes(extended, keep);
}

/// Beam splitter of power transmissivity t between mode_a and mode_b:
/// b_a = sqrt(t) a - sqrt(1-t) b, b_b = sqrt(1-t) a + sqrt(t) b, acting
/// identically on both quadratures. t = 1 is the identity; t = 1/2 sends the
/// mean of mode_a with equal +/+ signs to both outputs.
template <typename Scalar>
GaussianState<Scalar> apply_beam_splitter(const GaussianState<Scalar>& state,
                                          Eigen::Index mode_a,
                                          Eigen::Index mode_b,
                                          Scalar transmissivity) {
  detail::check_mode(state, mode_a, "apply_beam_splitter");
  detail::check_mode(state, mode_b, "apply_beam_splitter");
  if (mode_a == mode_b) {
    throw std::invalid_argument("apply_beam_splitter: modes must differ");
  }
  if (!(transmissivity >= Scalar(0) && transmissivity <= Scalar(1))) {
    throw std::domain_error(
        "apply_beam_splitter: transmissivity must lie in [0, 1]");
  }
  const Scalar c = std::sqrt(transmissivity);
  const Scalar s = std::sqrt(Scalar(1) - transmissivity);
  const Scalar z = Scalar(0);
  typename GaussianState<Scalar>::Matrix local(4, 4);
  local << c, z, -s, z,
           z, c, z, -s,
           s, z, c, z,
           z, s, z, c;
  return detail::apply_local_map(state, {mode_a, mode_b}, local);
}

/// Overlap <alpha| rho |alpha> between one mode of a Gaussian state and the
/// coherent target |alpha>. Requires the mode's covariance block to be
/// diagonal, diag(V+, V-):
///
///   F = 2 / sqrt((1+V+)(1+V-))
///       * exp(-(m+ - 2 alpha_x)^2 / (2(1+V+)) - (m- - 2 alpha_y)^2 / (2(1+V-)))
template <typename Scalar>
Scalar fidelity_vs_coherent(const std::complex<Scalar>& alpha,
                            const GaussianState<Scalar>& state,
                            Eigen::Index mode = 0) {
  detail::check_mode(state, mode, "fidelity_vs_coherent");
  const Scalar vp = state.var_plus(mode);
  const Scalar vm = state.var_minus(mode);
  const Scalar off = state.cov()(2 * mode, 2 * mode + 1);
  if (std::abs(off) >
      Scalar(1e-12) * std::max(Scalar(1), std::max(vp, vm))) {
    throw std::invalid_argument(
        "fidelity_vs_coherent: covariance block must be diagonal");
  }
  const Scalar dp = state.mean_plus(mode) - Scalar(2) * alpha.real();
  const Scalar dm = state.mean_minus(mode) - Scalar(2) * alpha.imag();
  const Scalar sp = Scalar(1) + vp;
  const Scalar sm = Scalar(1) + vm;
  return Scalar(2) / std::sqrt(sp * sm) *
         std::exp(-dp * dp / (Scalar(2) * sp) - dm * dm / (Scalar(2) * sm));
}

/// Checks the multimode uncertainty relation cov + i * Omega >= 0 up to
/// -tol on the smallest eigenvalue.
template <typename Scalar>
bool is_physical(const GaussianState<Scalar>& state, Scalar tol = 1e-10) {
  const Eigen::Index dim = state.mean().size();
  using ComplexMatrix =
      Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  ComplexMatrix m = state.cov().template cast<std::complex<Scalar>>();
  const std::complex<Scalar> i_unit(Scalar(0), Scalar(1));
  for (Eigen::Index k = 0; k < dim / 2; ++k) {
    m(2 * k, 2 * k + 1) += i_unit;
    m(2 * k + 1, 2 * k) -= i_unit;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) return false;
  const Scalar scale =
      Scalar(1) + state.cov().template lpNorm<Eigen::Infinity>();
  return solver.eigenvalues().minCoeff() >= -tol * scale;
}

}  // namespace gaussclone
