#include "edmsphere/sym_matrix.hpp"

#include <cmath>
#include <string>

#include "edmsphere/errors.hpp"

namespace edmsphere {

SymMatrix SymMatrix::from_lower(const Eigen::MatrixXd& lower) {
  if (lower.rows() != lower.cols()) {
    throw PreconditionError("symmetric matrix must be square, got " + std::to_string(lower.rows()) +
                            "x" + std::to_string(lower.cols()));
  }
  const Index n = lower.rows();
  Eigen::MatrixXd m(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = j; i < n; ++i) {
      const double v = lower(i, j);
      if (!std::isfinite(v)) {
        throw PreconditionError("non-finite entry at (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ")");
      }
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::from_full(const Eigen::MatrixXd& full, double asym_tol) {
  if (full.rows() == full.cols()) {
    for (Index j = 0; j < full.cols(); ++j) {
      for (Index i = j + 1; i < full.rows(); ++i) {
        if (!(std::abs(full(i, j) - full(j, i)) <= asym_tol)) {
          throw PreconditionError("matrix is not symmetric at (" + std::to_string(i + 1) + ", " +
                                  std::to_string(j + 1) + ")");
        }
      }
    }
  }
  return from_lower(full);
}

SymMatrix SymMatrix::identity(Index n) { return SymMatrix(Eigen::MatrixXd::Identity(n, n)); }
SymMatrix SymMatrix::ones(Index n) { return SymMatrix(Eigen::MatrixXd::Ones(n, n)); }
SymMatrix SymMatrix::zero(Index n) { return SymMatrix(Eigen::MatrixXd::Zero(n, n)); }

double SymMatrix::max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

double SymMatrix::scale() const { return std::max(1.0, max_abs()); }

bool SymMatrix::is_nonnegative() const { return m_.size() == 0 || m_.minCoeff() >= 0.0; }

SymMatrix SymMatrix::principal(std::span<const Index> indices) const {
  const auto k = static_cast<Index>(indices.size());
  Eigen::MatrixXd sub(k, k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) sub(a, b) = m_(indices[a], indices[b]);
  }
  return SymMatrix(std::move(sub));
}

SymMatrix SymMatrix::operator+(const SymMatrix& other) const { return SymMatrix(m_ + other.m_); }
SymMatrix SymMatrix::operator-(const SymMatrix& other) const { return SymMatrix(m_ - other.m_); }
SymMatrix SymMatrix::operator*(double factor) const { return SymMatrix(m_ * factor); }

}  // namespace edmsphere
