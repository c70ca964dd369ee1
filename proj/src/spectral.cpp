#include "edmsphere/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "edmsphere/errors.hpp"
#include "edmsphere/kernels.hpp"

namespace edmsphere {

EigenSystem eig(const SymMatrix& m, const Tolerances& tol) {
  const Index n = m.order();
  auto raw = kernels::jacobi_eigen(m.dense());
  if (!raw.converged) {
    throw ConvergenceError("Jacobi iteration did not converge within " +
                           std::to_string(raw.sweeps) + " sweeps (order " + std::to_string(n) +
                           ")");
  }

  std::vector<Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Index{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Index a, Index b) { return raw.values(a) > raw.values(b); });

  EigenSystem es;
  es.values.resize(n);
  es.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    es.values(k) = raw.values(idx[k]);
    es.vectors.col(k) = raw.vectors.col(idx[k]);
  }
  es.sweeps = raw.sweeps;
  es.tolerance = tol.recon_bound(n, m.scale());
  es.residual = kernels::reconstruction_residual(es.vectors, es.values, m.dense());
  es.orthonormality = kernels::orthonormality_residual(es.vectors);
  if (es.residual > es.tolerance || es.orthonormality > es.tolerance) {
    throw ConsistencyError("eigendecomposition residual " + std::to_string(es.residual) +
                           " / orthonormality " + std::to_string(es.orthonormality) +
                           " exceeds bound " + std::to_string(es.tolerance));
  }
  return es;
}

PsdCheck is_psd(const EigenSystem& es, double scale, const Tolerances& tol) {
  PsdCheck check;
  const Index n = es.values.size();
  if (n == 0) return check;
  check.min_eigenvalue = es.values(n - 1);
  if (check.min_eigenvalue < -tol.psd * scale) {
    check.psd = false;
    check.witness.emplace(check.min_eigenvalue, es.vectors.col(n - 1));
  }
  return check;
}

PsdCheck is_psd(const SymMatrix& m, const Tolerances& tol) {
  return is_psd(eig(m, tol), m.scale(), tol);
}

Index numerical_rank(const EigenSystem& es, double scale, const Tolerances& tol) {
  const double cut = tol.rank * scale;
  return static_cast<Index>(std::count_if(es.values.begin(), es.values.end(),
                                          [cut](double v) { return std::abs(v) > cut; }));
}

Index numerical_rank(const SymMatrix& m, const Tolerances& tol) {
  return numerical_rank(eig(m, tol), m.scale(), tol);
}

Index top_multiplicity(const Eigen::VectorXd& values, const Tolerances& tol) {
  if (values.size() == 0) return 0;
  const double top = values(0);
  return static_cast<Index>(std::count_if(values.begin(), values.end(), [&](double v) {
    return std::abs(v - top) <= tol.cluster;
  }));
}

void normalize_sign(Eigen::Ref<Eigen::VectorXd> v) {
  if (v.size() == 0) return;
  const double top = v.cwiseAbs().maxCoeff();
  if (top == 0.0) return;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top * (1.0 - 1e-12)) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

PerronData perron(const SymMatrix& m, const Tolerances& tol) {
  if (m.order() == 0) throw PreconditionError("perron: empty matrix");
  if (!m.is_nonnegative()) throw PreconditionError("perron: matrix has a negative entry");
  const auto es = eig(m, tol);
  PerronData pd;
  pd.lambda_max = es.values(0);
  pd.multiplicity = top_multiplicity(es.values, tol);
  pd.xi = es.vectors.col(0);
  normalize_sign(pd.xi);
  return pd;
}

LinearSolution solve_linear(const SymMatrix& m, const Eigen::VectorXd& b, const Tolerances& tol) {
  if (b.size() != m.order()) throw PreconditionError("solve_linear: dimension mismatch");
  const auto es = eig(m, tol);
  const double scale = m.scale();
  const double cut = tol.rank * scale;
  LinearSolution sol;
  sol.x = Eigen::VectorXd::Zero(m.order());
  for (Index k = 0; k < es.values.size(); ++k) {
    if (std::abs(es.values(k)) > cut) {
      const auto vk = es.vectors.col(k);
      sol.x += (vk.dot(b) / es.values(k)) * vk;
    }
  }
  sol.residual = m.order() == 0 ? 0.0 : (m.dense() * sol.x - b).cwiseAbs().maxCoeff();
  sol.consistent = sol.residual <= tol.solve * scale;
  return sol;
}

}  // namespace edmsphere
