#pragma once

#include <span>

#include <Eigen/Core>

#include "edmsphere/tolerances.hpp"

namespace edmsphere {

/// Dense real symmetric matrix with finite entries.
///
/// Only the lower triangle of the input is read; the upper triangle is a
/// mirror, so `(i, j)` and `(j, i)` are bitwise equal.
class SymMatrix {
public:
  SymMatrix() = default;

  /// Mirrors the lower triangle of `lower`. Throws PreconditionError if the
  /// matrix is not square or has a non-finite entry in the lower triangle.
  static SymMatrix from_lower(const Eigen::MatrixXd& lower);

  /// Like from_lower, but also requires |m(i,j) - m(j,i)| <= asym_tol.
  static SymMatrix from_full(const Eigen::MatrixXd& full, double asym_tol = 0.0);

  static SymMatrix identity(Index n);
  static SymMatrix ones(Index n);
  static SymMatrix zero(Index n);

  Index order() const { return m_.rows(); }
  double operator()(Index i, Index j) const { return m_(i, j); }
  const Eigen::MatrixXd& dense() const { return m_; }

  double max_abs() const;
  /// max(1, max |entry|)
  double scale() const;
  bool is_nonnegative() const;

  /// Principal submatrix on `indices` (in the given order).
  SymMatrix principal(std::span<const Index> indices) const;

  SymMatrix operator+(const SymMatrix& other) const;
  SymMatrix operator-(const SymMatrix& other) const;
  SymMatrix operator*(double factor) const;

private:
  explicit SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

inline SymMatrix operator*(double factor, const SymMatrix& m) { return m * factor; }

}  // namespace edmsphere
