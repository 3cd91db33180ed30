#include "gaussclone/numerics.hpp"

#include <cstdlib>
#include <numbers>

namespace gaussclone {

QuadratureRule gauss_hermite(int order) {
  if (order < 1) {
    throw std::invalid_argument("gauss_hermite: order must be >= 1");
  }
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  QuadratureRule rule;
  if (order == 1) {
    rule.nodes = Eigen::VectorXd::Zero(1);
    rule.weights = Eigen::VectorXd::Constant(1, sqrt_pi);
    return rule;
  }

  // Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
  // matrix of the Hermite recurrence; weights come from the first component
  // of each normalized eigenvector.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd subdiag(order - 1);
  for (int k = 1; k < order; ++k) {
    subdiag[k - 1] = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_hermite: eigen decomposition failed");
  }
  rule.nodes = solver.eigenvalues();
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    const double first = solver.eigenvectors()(0, i);
    rule.weights[i] = sqrt_pi * first * first;
  }

  // The eigenproblem is symmetric only to rounding; pin the +/- node pairing
  // exactly so even integrands cancel odd error terms.
  for (int i = 0, j = order - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = w;
    rule.weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

int worker_count() {
  if (const char* env = std::getenv("GAUSSCLONE_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) {
      return static_cast<int>(std::min(requested, 256L));
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

}  // namespace gaussclone
