#pragma once

// Dense kernels behind the spectral and EDM layers.
//
// `kernels::` holds the production implementations, parallelized with OpenMP
// when the order reaches `kParallelMinOrder`. `kernels::reference::` holds
// plain serial implementations of the same contracts; they are kept for the
// test suite and the benchmark. Every parallel kernel produces bitwise
// identical output for any thread count.

#include <Eigen/Core>

#include "edmsphere/tolerances.hpp"

namespace edmsphere::kernels {

/// Orders below this run the parallel kernels on a single thread.
inline constexpr Index kParallelMinOrder = 48;

struct JacobiResult {
  Eigen::VectorXd values;   // unsorted, values(i) pairs with vectors.col(i)
  Eigen::MatrixXd vectors;  // orthonormal columns
  int sweeps = 0;
  bool converged = false;
};

/// Jacobi eigenvalue iteration with round-robin (chess tournament) pair
/// ordering. Each round rotates n/2 disjoint index pairs at once.
/// `a` must be symmetric.
JacobiResult jacobi_eigen(const Eigen::MatrixXd& a, int max_sweeps = 100);

/// d(i, j) = |p_i - p_j|^2 for the rows p_i of `points`.
Eigen::MatrixXd squared_distances(const Eigen::MatrixXd& points);

/// B = -1/2 (I - e s^T) D (I - s e^T).
Eigen::MatrixXd double_center(const Eigen::MatrixXd& d, const Eigen::VectorXd& s);

/// max |V diag(values) V^T - m|
double reconstruction_residual(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& values,
                               const Eigen::MatrixXd& m);

/// max |V^T V - I|
double orthonormality_residual(const Eigen::MatrixXd& vectors);

namespace reference {

/// Textbook cyclic-by-row Jacobi.
JacobiResult jacobi_eigen(const Eigen::MatrixXd& a, int max_sweeps = 100);
Eigen::MatrixXd squared_distances(const Eigen::MatrixXd& points);
Eigen::MatrixXd double_center(const Eigen::MatrixXd& d, const Eigen::VectorXd& s);
double reconstruction_residual(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& values,
                               const Eigen::MatrixXd& m);
double orthonormality_residual(const Eigen::MatrixXd& vectors);

}  // namespace reference

namespace detail {

/// Off-diagonal entries at or below this magnitude are not rotated.
double jacobi_threshold(const Eigen::MatrixXd& a);

struct Rotation {
  Index p = 0;
  Index q = 0;
  double c = 1.0;
  double s = 0.0;
  double t = 0.0;
};

/// Rotation annihilating a(p, q); p < q.
Rotation make_rotation(const Eigen::MatrixXd& a, Index p, Index q);

}  // namespace detail

}  // namespace edmsphere::kernels
