#include "edmsphere/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace edmsphere::kernels {

namespace detail {

double jacobi_threshold(const Eigen::MatrixXd& a) {
  return 4.0 * std::numeric_limits<double>::epsilon() * a.norm();
}

Rotation make_rotation(const Eigen::MatrixXd& a, Index p, Index q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return Rotation{p, q, c, t * c, t};
}

}  // namespace detail

namespace {

struct PendingRotation {
  detail::Rotation rot;
  double app;
  double aqq;
  double apq;
};

}  // namespace

JacobiResult jacobi_eigen(const Eigen::MatrixXd& input, int max_sweeps) {
  const Index n = input.rows();
  Eigen::MatrixXd a = input;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  JacobiResult result;

  if (n <= 1) {
    result.values = a.diagonal();
    result.vectors = std::move(v);
    result.converged = true;
    return result;
  }

  const double thresh = detail::jacobi_threshold(a);
  const bool parallel = n >= kParallelMinOrder;
  // Odd orders get a phantom player n that sits out one pair per round.
  const Index players = n + (n % 2);
  std::vector<Index> order(static_cast<std::size_t>(players));
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<PendingRotation> batch;
  batch.reserve(static_cast<std::size_t>(players / 2));

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool rotated = false;
    for (Index round = 0; round + 1 < players; ++round) {
      batch.clear();
      for (Index i = 0; i < players / 2; ++i) {
        Index p = order[i];
        Index q = order[players - 1 - i];
        if (p >= n || q >= n) continue;
        if (p > q) std::swap(p, q);
        if (std::abs(a(p, q)) > thresh) {
          batch.push_back({detail::make_rotation(a, p, q), a(p, p), a(q, q), a(p, q)});
        }
      }
      std::rotate(order.begin() + 1, order.end() - 1, order.end());
      if (batch.empty()) continue;
      rotated = true;
      const auto count = static_cast<Index>(batch.size());

      // a <- a J. Pairs in a batch touch disjoint columns.
#pragma omp parallel for if (parallel) schedule(static)
      for (Index r = 0; r < count; ++r) {
        const auto& rot = batch[r].rot;
        for (Index k = 0; k < n; ++k) {
          const double x = a(k, rot.p);
          const double y = a(k, rot.q);
          a(k, rot.p) = rot.c * x - rot.s * y;
          a(k, rot.q) = rot.s * x + rot.c * y;
        }
      }
      // a <- J^T a. Disjoint rows.
#pragma omp parallel for if (parallel) schedule(static)
      for (Index r = 0; r < count; ++r) {
        const auto& rot = batch[r].rot;
        for (Index k = 0; k < n; ++k) {
          const double x = a(rot.p, k);
          const double y = a(rot.q, k);
          a(rot.p, k) = rot.c * x - rot.s * y;
          a(rot.q, k) = rot.s * x + rot.c * y;
        }
      }
      // Each 2x2 pivot block only sees its own rotation, so the closed form
      // applies exactly.
      for (const auto& pending : batch) {
        const auto& rot = pending.rot;
        a(rot.p, rot.p) = pending.app - rot.t * pending.apq;
        a(rot.q, rot.q) = pending.aqq + rot.t * pending.apq;
        a(rot.p, rot.q) = 0.0;
        a(rot.q, rot.p) = 0.0;
      }
#pragma omp parallel for if (parallel) schedule(static)
      for (Index j = 1; j < n; ++j) {
        for (Index i = 0; i < j; ++i) a(i, j) = a(j, i);
      }
#pragma omp parallel for if (parallel) schedule(static)
      for (Index r = 0; r < count; ++r) {
        const auto& rot = batch[r].rot;
        for (Index k = 0; k < n; ++k) {
          const double x = v(k, rot.p);
          const double y = v(k, rot.q);
          v(k, rot.p) = rot.c * x - rot.s * y;
          v(k, rot.q) = rot.s * x + rot.c * y;
        }
      }
    }
    if (!rotated) {
      result.sweeps = sweep;
      result.converged = true;
      break;
    }
    result.sweeps = sweep;
  }

  result.values = a.diagonal();
  result.vectors = std::move(v);
  return result;
}

Eigen::MatrixXd squared_distances(const Eigen::MatrixXd& points) {
  const Index n = points.rows();
  const Index dim = points.cols();
  Eigen::MatrixXd d(n, n);
#pragma omp parallel for if (n >= kParallelMinOrder) schedule(static)
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      double acc = 0.0;
      for (Index k = 0; k < dim; ++k) {
        const double diff = points(i, k) - points(j, k);
        acc += diff * diff;
      }
      d(i, j) = acc;
    }
  }
  return d;
}

Eigen::MatrixXd double_center(const Eigen::MatrixXd& d, const Eigen::VectorXd& s) {
  const Index n = d.rows();
  const bool parallel = n >= kParallelMinOrder;
  Eigen::VectorXd ds(n);
#pragma omp parallel for if (parallel) schedule(static)
  for (Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Index j = 0; j < n; ++j) acc += d(i, j) * s(j);
    ds(i) = acc;
  }
  const double sds = s.dot(ds);
  Eigen::MatrixXd b(n, n);
#pragma omp parallel for if (parallel) schedule(static)
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) b(i, j) = -0.5 * (d(i, j) - (ds(i) + ds(j)) + sds);
  }
  return b;
}

double reconstruction_residual(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& values,
                               const Eigen::MatrixXd& m) {
  const Index n = m.rows();
  const Index cols = vectors.cols();
  double worst = 0.0;
#pragma omp parallel for if (n >= kParallelMinOrder) schedule(static) reduction(max : worst)
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      double acc = 0.0;
      for (Index k = 0; k < cols; ++k) acc += vectors(i, k) * values(k) * vectors(j, k);
      worst = std::max(worst, std::abs(acc - m(i, j)));
    }
  }
  return worst;
}

double orthonormality_residual(const Eigen::MatrixXd& vectors) {
  const Index cols = vectors.cols();
  const Index rows = vectors.rows();
  double worst = 0.0;
#pragma omp parallel for if (cols >= kParallelMinOrder) schedule(static) reduction(max : worst)
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < cols; ++i) {
      double acc = 0.0;
      for (Index k = 0; k < rows; ++k) acc += vectors(k, i) * vectors(k, j);
      worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace edmsphere::kernels
