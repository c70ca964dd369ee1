#pragma once

#include <optional>
#include <span>
#include <string>

#include <Eigen/Core>

#include "edmsphere/spectral.hpp"
#include "edmsphere/sym_matrix.hpp"
#include "edmsphere/tolerances.hpp"

namespace edmsphere {

struct EdmValidation;

enum class EdmRejection { none, not_square, non_finite, asymmetric, nonzero_diagonal, negative_entry, not_psd };

const char* to_string(EdmRejection r);

/// A validated Euclidean distance matrix of squared distances.
class Edm {
public:
  /// Validates and throws PreconditionError on rejection.
  static Edm checked(const SymMatrix& d, const Tolerances& tol = {});

  Index order() const { return d_.order(); }
  const SymMatrix& dist2() const { return d_; }
  double operator()(Index i, Index j) const { return d_(i, j); }
  Index embedding_dim() const { return embedding_dim_; }
  const Tolerances& tolerances() const { return tol_; }
  /// Smallest off-diagonal entry; +inf for order 1.
  double min_offdiag() const;

  /// Principal submatrix, revalidated.
  Edm principal(std::span<const Index> indices) const;

private:
  Edm(SymMatrix d, Index dim, const Tolerances& tol) : d_(std::move(d)), embedding_dim_(dim), tol_(tol) {}
  friend EdmValidation validate_edm(const SymMatrix& m, const Tolerances& tol);

  SymMatrix d_;
  Index embedding_dim_ = 0;
  Tolerances tol_;
};

struct EdmValidation {
  std::optional<Edm> edm;  // engaged iff accepted
  EdmRejection reason = EdmRejection::none;
  std::string detail;
  std::optional<std::pair<double, Eigen::VectorXd>> witness;  // for not_psd

  explicit operator bool() const { return edm.has_value(); }
};

/// Accepts iff zero diagonal, nonnegative entries, and the double-centered
/// matrix with s = e/n is PSD. Rejection is a value.
EdmValidation validate_edm(const SymMatrix& m, const Tolerances& tol = {});
/// As above, but also reports shape, finiteness and symmetry problems as
/// rejections.
EdmValidation validate_edm(const Eigen::MatrixXd& m, const Tolerances& tol = {});

struct GramFactor {
  SymMatrix gram;          // B
  Eigen::MatrixXd config;  // n x r, rows are points
  Eigen::VectorXd centering;  // s
};

/// B = -1/2 (I - e s^T) D (I - s e^T) and its rank-revealing factor P with
/// B = P P^T. Columns of P follow descending eigenvalues, each sign
/// normalized. Throws PreconditionError if |e^T s - 1| > tol.solve.
GramFactor gram_factor(const Edm& d, const Eigen::VectorXd& s);
/// s = e / n
GramFactor gram_factor(const Edm& d);

enum class SphericalStatus { spherical, non_spherical, not_edm, e_not_in_colspace };

const char* to_string(SphericalStatus s);

struct SphericalCertificate {
  SphericalStatus status = SphericalStatus::not_edm;
  Eigen::VectorXd w;  // minimum-norm solution of D w = e
  double etw = 0.0;
  std::optional<double> radius;
  double residual = 0.0;  // |D w - e|_inf
  bool unit = false;      // |2 e^T w - 1| <= tol.unit
};

SphericalCertificate spherical_certificate(const Edm& d);

struct DeltaMatrix {
  SymMatrix delta;  // D/2 + I - E
  double source_min_offdiag = 0.0;

  bool nonnegative() const { return source_min_offdiag >= 2.0; }
};

DeltaMatrix delta_of(const Edm& d);

struct EmbeddingDimReport {
  Index dimension = 0;
  bool perron_applicable = false;  // false when some d_ij < 2
  double lambda_max = 0.0;
  Index multiplicity = 0;
  bool lambda_max_is_one = false;
  double delta_w_residual = 0.0;  // |Delta w - w|_inf
  bool delta_w_ok = false;
  Index gram_rank = 0;            // rank(I - Delta)
};

/// Embedding dimension as n - m(lambda_max(Delta)) for a unit spherical EDM.
/// Falls back to the Gram rank when Delta has a negative entry. Throws
/// PreconditionError unless `cert` is spherical with the unit flag.
EmbeddingDimReport embedding_dim_via_delta(const Edm& d, const SphericalCertificate& cert);

}  // namespace edmsphere
