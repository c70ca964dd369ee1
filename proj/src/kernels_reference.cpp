#include "edmsphere/kernels.hpp"

#include <cmath>

namespace edmsphere::kernels::reference {

JacobiResult jacobi_eigen(const Eigen::MatrixXd& input, int max_sweeps) {
  const Index n = input.rows();
  Eigen::MatrixXd a = input;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  JacobiResult result;
  const double thresh = detail::jacobi_threshold(a);

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool rotated = false;
    for (Index p = 0; p < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        if (!(std::abs(a(p, q)) > thresh)) continue;
        rotated = true;
        const auto rot = detail::make_rotation(a, p, q);
        const double apq = a(p, q);
        for (Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double x = a(k, p);
          const double y = a(k, q);
          a(k, p) = a(p, k) = rot.c * x - rot.s * y;
          a(k, q) = a(q, k) = rot.s * x + rot.c * y;
        }
        a(p, p) -= rot.t * apq;
        a(q, q) += rot.t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (Index k = 0; k < n; ++k) {
          const double x = v(k, p);
          const double y = v(k, q);
          v(k, p) = rot.c * x - rot.s * y;
          v(k, q) = rot.s * x + rot.c * y;
        }
      }
    }
    result.sweeps = sweep;
    if (!rotated) {
      result.converged = true;
      break;
    }
  }
  if (n <= 1) result.converged = true;

  result.values = a.diagonal();
  result.vectors = std::move(v);
  return result;
}

Eigen::MatrixXd squared_distances(const Eigen::MatrixXd& points) {
  const Index n = points.rows();
  Eigen::MatrixXd d(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) d(i, j) = (points.row(i) - points.row(j)).squaredNorm();
  }
  return d;
}

Eigen::MatrixXd double_center(const Eigen::MatrixXd& d, const Eigen::VectorXd& s) {
  const Index n = d.rows();
  const Eigen::MatrixXd left =
      Eigen::MatrixXd::Identity(n, n) - Eigen::VectorXd::Ones(n) * s.transpose();
  return -0.5 * left * d * left.transpose();
}

double reconstruction_residual(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& values,
                               const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return (vectors * values.asDiagonal() * vectors.transpose() - m).cwiseAbs().maxCoeff();
}

double orthonormality_residual(const Eigen::MatrixXd& vectors) {
  if (vectors.cols() == 0) return 0.0;
  const Index c = vectors.cols();
  return (vectors.transpose() * vectors - Eigen::MatrixXd::Identity(c, c)).cwiseAbs().maxCoeff();
}

}  // namespace edmsphere::kernels::reference
