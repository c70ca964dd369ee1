#pragma once

#include <optional>

#include <Eigen/Core>

#include "edmsphere/sym_matrix.hpp"
#include "edmsphere/tolerances.hpp"

namespace edmsphere {

/// Full eigendecomposition, eigenvalues non-increasing.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // column i pairs with values(i)
  double tolerance = 0.0;   // reconstruction bound that was enforced
  double residual = 0.0;    // measured max |V diag V^T - M|
  double orthonormality = 0.0;
  int sweeps = 0;
};

/// Throws ConvergenceError when the sweep cap is hit, ConsistencyError when
/// the reconstruction or orthonormality bound is missed.
EigenSystem eig(const SymMatrix& m, const Tolerances& tol = {});

struct PsdCheck {
  bool psd = true;
  double min_eigenvalue = 0.0;
  /// Offending eigenpair when `psd` is false.
  std::optional<std::pair<double, Eigen::VectorXd>> witness;
};

PsdCheck is_psd(const SymMatrix& m, const Tolerances& tol = {});
PsdCheck is_psd(const EigenSystem& es, double scale, const Tolerances& tol = {});

Index numerical_rank(const SymMatrix& m, const Tolerances& tol = {});
Index numerical_rank(const EigenSystem& es, double scale, const Tolerances& tol = {});

struct PerronData {
  double lambda_max = 0.0;
  Index multiplicity = 0;
  Eigen::VectorXd xi;  // unit norm, largest-magnitude entry positive
};

/// Top of the spectrum of a nonnegative symmetric matrix. Throws
/// PreconditionError on a negative entry or an empty matrix.
PerronData perron(const SymMatrix& m, const Tolerances& tol = {});

/// Number of eigenvalues within tol.cluster of `values(0)`.
Index top_multiplicity(const Eigen::VectorXd& values, const Tolerances& tol = {});

struct LinearSolution {
  bool consistent = false;
  Eigen::VectorXd x;      // minimum-norm least-squares solution
  double residual = 0.0;  // |M x - b|_inf
};

/// Minimum-norm solution of Mx = b through the eigen-pseudoinverse.
/// `consistent` is false when the residual exceeds tol.solve * scale(M).
LinearSolution solve_linear(const SymMatrix& m, const Eigen::VectorXd& b,
                            const Tolerances& tol = {});

/// Flips `v` so its largest-magnitude entry is positive. Magnitudes within
/// a relative 1e-12 of the maximum tie, and the lowest index wins.
void normalize_sign(Eigen::Ref<Eigen::VectorXd> v);

}  // namespace edmsphere
