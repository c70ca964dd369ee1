#include "edmsphere/edm.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "edmsphere/errors.hpp"
#include "edmsphere/kernels.hpp"

namespace edmsphere {

const char* to_string(EdmRejection r) {
  switch (r) {
    case EdmRejection::none: return "none";
    case EdmRejection::not_square: return "not-square";
    case EdmRejection::non_finite: return "non-finite";
    case EdmRejection::asymmetric: return "asymmetric";
    case EdmRejection::nonzero_diagonal: return "nonzero-diagonal";
    case EdmRejection::negative_entry: return "negative-entry";
    case EdmRejection::not_psd: return "not-psd";
  }
  return "unknown";
}

const char* to_string(SphericalStatus s) {
  switch (s) {
    case SphericalStatus::spherical: return "spherical";
    case SphericalStatus::non_spherical: return "non-spherical";
    case SphericalStatus::not_edm: return "not-edm";
    case SphericalStatus::e_not_in_colspace: return "e-not-in-colspace";
  }
  return "unknown";
}

namespace {

std::string at(Index i, Index j) {
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

EdmValidation reject(EdmRejection why, std::string detail) {
  EdmValidation v;
  v.reason = why;
  v.detail = std::move(detail);
  return v;
}

}  // namespace

EdmValidation validate_edm(const SymMatrix& m, const Tolerances& tol) {
  const Index n = m.order();
  if (n == 0) return reject(EdmRejection::not_square, "empty matrix");
  for (Index i = 0; i < n; ++i) {
    if (m(i, i) != 0.0) {
      return reject(EdmRejection::nonzero_diagonal,
                    "diagonal entry " + at(i, i) + " = " + std::to_string(m(i, i)));
    }
  }
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      if (m(i, j) < 0.0) {
        return reject(EdmRejection::negative_entry,
                      "negative squared distance at " + at(i, j) + " = " + std::to_string(m(i, j)));
      }
    }
  }

  const Eigen::VectorXd s = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  const auto b = SymMatrix::from_lower(kernels::double_center(m.dense(), s));
  const auto es = eig(b, tol);
  const auto psd = is_psd(es, b.scale(), tol);
  if (!psd.psd) {
    auto v = reject(EdmRejection::not_psd, "double-centered matrix has eigenvalue " +
                                               std::to_string(psd.min_eigenvalue));
    v.witness = psd.witness;
    return v;
  }
  EdmValidation ok;
  ok.edm.emplace(Edm(m, numerical_rank(es, b.scale(), tol), tol));
  return ok;
}

EdmValidation validate_edm(const Eigen::MatrixXd& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    return reject(EdmRejection::not_square, "matrix is " + std::to_string(m.rows()) + "x" +
                                                std::to_string(m.cols()));
  }
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j))) return reject(EdmRejection::non_finite, "entry " + at(i, j));
    }
  }
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = j + 1; i < m.rows(); ++i) {
      if (m(i, j) != m(j, i)) {
        return reject(EdmRejection::asymmetric, "entries " + at(i, j) + " and " + at(j, i) + " differ");
      }
    }
  }
  return validate_edm(SymMatrix::from_lower(m), tol);
}

Edm Edm::checked(const SymMatrix& d, const Tolerances& tol) {
  auto v = validate_edm(d, tol);
  if (!v) {
    throw PreconditionError(std::string("not an EDM (") + to_string(v.reason) + "): " + v.detail);
  }
  return std::move(*v.edm);
}

double Edm::min_offdiag() const {
  double lo = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < order(); ++j) {
    for (Index i = j + 1; i < order(); ++i) lo = std::min(lo, d_(i, j));
  }
  return lo;
}

Edm Edm::principal(std::span<const Index> indices) const {
  return checked(d_.principal(indices), tol_);
}

GramFactor gram_factor(const Edm& d, const Eigen::VectorXd& s) {
  const auto& tol = d.tolerances();
  const Index n = d.order();
  if (s.size() != n) throw PreconditionError("gram_factor: centering vector has wrong length");
  if (std::abs(s.sum() - 1.0) > tol.solve) {
    throw PreconditionError("gram_factor: centering vector must satisfy e^T s = 1, got " +
                            std::to_string(s.sum()));
  }
  auto b = SymMatrix::from_lower(kernels::double_center(d.dist2().dense(), s));
  const auto es = eig(b, tol);
  const double scale = b.scale();
  if (!is_psd(es, scale, tol).psd) {
    throw PreconditionError("gram_factor: Gram matrix is not PSD (min eigenvalue " +
                            std::to_string(es.values(n - 1)) + ")");
  }
  Index r = 0;
  while (r < n && es.values(r) > tol.rank * scale) ++r;

  Eigen::MatrixXd config(n, r);
  for (Index c = 0; c < r; ++c) {
    Eigen::VectorXd v = es.vectors.col(c);
    normalize_sign(v);
    config.col(c) = std::sqrt(es.values(c)) * v;
  }
  return GramFactor{std::move(b), std::move(config), s};
}

GramFactor gram_factor(const Edm& d) {
  return gram_factor(d, Eigen::VectorXd::Constant(d.order(), 1.0 / static_cast<double>(d.order())));
}

SphericalCertificate spherical_certificate(const Edm& d) {
  const auto& tol = d.tolerances();
  const Index n = d.order();
  const auto sol = solve_linear(d.dist2(), Eigen::VectorXd::Ones(n), tol);
  SphericalCertificate cert;
  cert.w = sol.x;
  cert.residual = sol.residual;
  cert.etw = sol.x.sum();
  if (!sol.consistent) {
    cert.status = SphericalStatus::e_not_in_colspace;
    return cert;
  }
  if (cert.etw > tol.psd) {
    cert.status = SphericalStatus::spherical;
    cert.radius = std::sqrt(1.0 / (2.0 * cert.etw));
    cert.unit = std::abs(2.0 * cert.etw - 1.0) <= tol.unit;
  } else {
    cert.status = SphericalStatus::non_spherical;
  }
  return cert;
}

DeltaMatrix delta_of(const Edm& d) {
  const Index n = d.order();
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) delta(i, j) = d(i, j) / 2.0 - 1.0;
  }
  return DeltaMatrix{SymMatrix::from_lower(delta), d.min_offdiag()};
}

EmbeddingDimReport embedding_dim_via_delta(const Edm& d, const SphericalCertificate& cert) {
  if (cert.status != SphericalStatus::spherical || !cert.unit) {
    throw PreconditionError("embedding_dim_via_delta: EDM is not unit spherical");
  }
  const auto& tol = d.tolerances();
  const Index n = d.order();
  const auto delta = delta_of(d);

  EmbeddingDimReport rep;
  rep.perron_applicable = delta.nonnegative();
  if (rep.perron_applicable) {
    const auto pd = perron(delta.delta, tol);
    rep.lambda_max = pd.lambda_max;
    rep.multiplicity = pd.multiplicity;
  } else {
    const auto es = eig(delta.delta, tol);
    rep.lambda_max = es.values(0);
    rep.multiplicity = top_multiplicity(es.values, tol);
  }
  rep.lambda_max_is_one = std::abs(rep.lambda_max - 1.0) <= tol.cluster;
  rep.delta_w_residual = (delta.delta.dense() * cert.w - cert.w).cwiseAbs().maxCoeff();
  rep.delta_w_ok = rep.delta_w_residual <= tol.solve;

  const auto b = SymMatrix::identity(n) - delta.delta;
  rep.gram_rank = numerical_rank(b, tol);
  rep.dimension = rep.perron_applicable ? n - rep.multiplicity : rep.gram_rank;
  return rep;
}

}  // namespace edmsphere
