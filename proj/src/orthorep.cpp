#include "edmsphere/orthorep.hpp"

#include <cmath>
#include <sstream>

#include "edmsphere/errors.hpp"
#include "edmsphere/spectral.hpp"

namespace edmsphere {

namespace {

Edm hollow_twos(Index n, const Tolerances& tol) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, 2.0);
  d.diagonal().setZero();
  return Edm::checked(SymMatrix::from_lower(d), tol);
}

OrthoRep standard_basis(const Graph& g, const Tolerances& tol) {
  const Index n = g.node_count();
  auto edm = hollow_twos(n, tol);
  auto delta = delta_of(edm);
  std::ostringstream note;
  note << "edgeless graph: standard basis in dimension " << n
       << "; its EDM 2(E - I) has circumradius sqrt((n-1)/n) = "
       << std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n))
       << " < 1, so it is not unit spherical";
  return OrthoRep{g,
                  0,
                  n,
                  Eigen::MatrixXd::Identity(n, n),
                  std::move(edm),
                  std::move(delta),
                  Eigen::VectorXd(),
                  SymMatrix::identity(n),
                  true,
                  note.str()};
}

}  // namespace

SignPatternReport verify_sign_pattern(const Edm& d, const Graph& g) {
  if (d.order() != g.node_count()) {
    throw PreconditionError("verify_sign_pattern: EDM order and node count differ");
  }
  const double tau = d.tolerances().sign;
  SignPatternReport rep;
  for (Index i = 0; i < d.order(); ++i) {
    for (Index j = i + 1; j < d.order(); ++j) {
      const bool edge = g.has_edge(i, j);
      const double v = d(i, j);
      const bool good = edge ? v > 2.0 + tau : std::abs(v - 2.0) <= tau;
      if (!good) rep.violations.push_back({i, j, v, edge});
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

OrthoRep sinajova_construct(const Graph& g, const Tolerances& tol) {
  const Index n = g.node_count();
  const auto split = components(g);
  if (split.nontrivial_count == 0) return standard_basis(g, tol);
  const Index k = split.nontrivial_count;
  const auto a = adjacency(g);

  std::vector<std::string> failures;
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(n);
  for (const auto& comp : split.nontrivial) {
    const auto pd = perron(a.principal(comp), tol);
    if (pd.multiplicity != 1 || pd.xi.minCoeff() <= 0.0) {
      std::ostringstream os;
      os << "component starting at node " << comp.front() + 1 << ": Perron multiplicity "
         << pd.multiplicity << ", min xi " << pd.xi.minCoeff();
      failures.push_back(os.str());
    }
    const auto size = static_cast<Index>(comp.size());
    for (Index p = 0; p < size; ++p) {
      xi(comp[p]) = pd.xi(p);
      for (Index q = 0; q < size; ++q) {
        delta(comp[p], comp[q]) = a(comp[p], comp[q]) / pd.lambda_max;
      }
    }
  }
  if (!failures.empty()) throw ConsistencyError("orthorep Perron step failed: " + failures.front());

  Eigen::MatrixXd dist = 2.0 * (Eigen::MatrixXd::Ones(n, n) + delta);
  dist.diagonal().setZero();
  auto edm = Edm::checked(SymMatrix::from_lower(dist), tol);
  auto delta_matrix = delta_of(edm);
  const Eigen::VectorXd w = xi / (2.0 * xi.sum());
  auto gf = gram_factor(edm, 2.0 * w);

  // Post-construction checks.
  const double scale = edm.dist2().scale();
  const double dw = (edm.dist2().dense() * w - Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff();
  if (dw > tol.solve * scale) failures.push_back("|Dw - e| = " + std::to_string(dw));
  if (std::abs(2.0 * w.sum() - 1.0) > tol.unit) failures.push_back("2 e^T w != 1");
  const auto cert = spherical_certificate(edm);
  if (cert.status != SphericalStatus::spherical || !cert.unit) {
    failures.push_back("Gower certificate is not unit spherical");
  }
  const auto signs = verify_sign_pattern(edm, g);
  if (!signs.ok) {
    failures.push_back("sign pattern violated at " + std::to_string(signs.violations.size()) +
                       " pairs");
  }
  if (gf.config.cols() != n - k || edm.embedding_dim() != n - k) {
    failures.push_back("rank(B) = " + std::to_string(gf.config.cols()) + ", expected n - k = " +
                       std::to_string(n - k));
  }
  const Eigen::MatrixXd expected_gram = Eigen::MatrixXd::Identity(n, n) - delta;
  const double gram_err = (gf.gram.dense() - expected_gram).cwiseAbs().maxCoeff();
  if (gram_err > tol.solve) failures.push_back("B != I - Delta by " + std::to_string(gram_err));
  const Eigen::MatrixXd inner = gf.config * gf.config.transpose();
  for (Index i = 0; i < n; ++i) {
    if (std::abs(inner(i, i) - 1.0) > tol.solve) {
      failures.push_back("point " + std::to_string(i + 1) + " is not a unit vector");
    }
    for (Index j = i + 1; j < n; ++j) {
      const bool edge = g.has_edge(i, j);
      const bool good = edge ? inner(i, j) < -tol.sign : std::abs(inner(i, j)) <= tol.sign;
      if (!good) {
        failures.push_back("inner product of points " + std::to_string(i + 1) + ", " +
                           std::to_string(j + 1) + " has the wrong sign");
      }
    }
  }
  if (!failures.empty()) {
    std::string msg = "orthorep verification failed:";
    for (const auto& f : failures) msg += "\n  " + f;
    throw ConsistencyError(msg);
  }

  const Index dim = gf.config.cols();
  return OrthoRep{g,
                  k,
                  dim,
                  std::move(gf.config),
                  std::move(edm),
                  std::move(delta_matrix),
                  w,
                  std::move(gf.gram),
                  false,
                  {}};
}

MinimalityReport minimality_bound(const Edm& d, const Graph& g) {
  const auto& tol = d.tolerances();
  const auto cert = spherical_certificate(d);
  if (cert.status != SphericalStatus::spherical || !cert.unit) {
    throw PreconditionError("minimality_bound: EDM is not unit spherical");
  }
  const auto signs = verify_sign_pattern(d, g);
  if (!signs.ok) throw PreconditionError("minimality_bound: EDM does not match the graph's sign pattern");

  const Index n = d.order();
  // Non-edges sit within tol.sign of distance 2; their Delta entries are noise.
  const auto raw = delta_of(d).delta;
  Eigen::MatrixXd clean = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [i, j] : g.edges()) {
    clean(i, j) = raw(i, j);
    clean(j, i) = raw(i, j);
  }
  const auto delta = SymMatrix::from_lower(clean);
  const auto global = perron(delta, tol);

  const auto split = components(g);
  MinimalityReport rep;
  rep.n = n;
  rep.k = split.nontrivial_count;
  rep.lambda_max = global.lambda_max;
  rep.global_multiplicity = global.multiplicity;
  rep.holds = true;
  for (const auto& comp : split.components) {
    const auto es = eig(delta.principal(comp), tol);
    BlockTop top;
    top.indices = comp;
    top.lambda_max = es.values(0);
    for (Index t = 0; t < es.values.size(); ++t) {
      if (std::abs(es.values(t) - global.lambda_max) <= tol.cluster) ++top.contribution;
    }
    if (top.contribution > 1) rep.holds = false;
    rep.multiplicity += top.contribution;
    if (comp.size() >= 2) rep.blocks.push_back(std::move(top));
    else if (top.contribution > 0) rep.holds = false;  // isolated node at lambda_max = 0
  }
  rep.holds = rep.holds && rep.multiplicity <= rep.k;
  rep.tight = rep.multiplicity == rep.k;
  rep.embedding_dim = n - rep.multiplicity;
  rep.edm_dim = d.embedding_dim();
  return rep;
}

}  // namespace edmsphere
