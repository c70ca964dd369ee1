#include "edmsphere/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edmsphere/errors.hpp"
#include "edmsphere/graph.hpp"
#include "edmsphere/spectral.hpp"

namespace edmsphere {

const char* to_string(OriginPosition p) {
  return p == OriginPosition::relative_interior ? "interior" : "boundary";
}

const char* to_string(SimplexBasis b) {
  switch (b) {
    case SimplexBasis::irreducible: return "irreducible";
    case SimplexBasis::zero_padded: return "zero-padded";
    case SimplexBasis::rank_only: return "rank-only";
  }
  return "unknown";
}

namespace {

SphericalCertificate require_unit_spherical(const Edm& d, const char* who) {
  auto cert = spherical_certificate(d);
  if (cert.status != SphericalStatus::spherical || !cert.unit) {
    std::string msg = std::string(who) + ": EDM is not unit spherical (status " +
                      to_string(cert.status);
    if (cert.radius) msg += ", radius " + std::to_string(*cert.radius);
    throw PreconditionError(msg + ")");
  }
  return cert;
}

void require_min_distance_two(const Edm& d, const char* who) {
  const double lo = d.min_offdiag();
  if (lo < 2.0 - d.tolerances().sign) {
    throw PreconditionError(std::string(who) + ": off-diagonal entry " + std::to_string(lo) +
                            " is below 2");
  }
}

/// Delta with entries of D inside (2 - tau, 2 + tau) snapped to 0.
SymMatrix clean_delta(const Edm& d) {
  const Index n = d.order();
  const double tau = d.tolerances().sign;
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      const double v = d(i, j);
      delta(i, j) = std::abs(v - 2.0) < tau ? 0.0 : v / 2.0 - 1.0;
    }
  }
  return SymMatrix::from_lower(delta);
}

Index lemma_gram_rank(const Edm& d) {
  return numerical_rank(SymMatrix::identity(d.order()) - delta_of(d).delta, d.tolerances());
}

}  // namespace

SimplexCertificate certify_simplex(const Edm& d) {
  const auto cert = require_unit_spherical(d, "certify_simplex");
  require_min_distance_two(d, "certify_simplex");
  const auto& tol = d.tolerances();
  const Index n = d.order();
  const auto delta = clean_delta(d);
  const auto split = components(support_graph(delta, tol.support));

  SimplexCertificate sc;
  sc.order = n;
  sc.gram_rank = lemma_gram_rank(d);
  sc.zero_rows = split.isolated;

  if (split.nontrivial.size() == 1) {
    const auto& comp = split.nontrivial.front();
    const auto pd = perron(delta.principal(comp), tol);
    if (std::abs(pd.lambda_max - 1.0) > tol.cluster || pd.multiplicity != 1 ||
        pd.xi.minCoeff() <= 0.0) {
      throw ConsistencyError("certify_simplex: irreducible block has lambda_max " +
                             std::to_string(pd.lambda_max) + " with multiplicity " +
                             std::to_string(pd.multiplicity) + " (expected a simple eigenvalue 1)");
    }
    sc.lambda_max = pd.lambda_max;
    sc.basis = split.isolated.empty() ? SimplexBasis::irreducible : SimplexBasis::zero_padded;
    sc.w = Eigen::VectorXd::Zero(n);
    const double total = pd.xi.sum();
    for (std::size_t p = 0; p < comp.size(); ++p) {
      sc.w(comp[p]) = pd.xi(static_cast<Index>(p)) / (2.0 * total);
    }
    const double residual = (d.dist2().dense() * sc.w - Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff();
    if (residual > tol.solve * d.dist2().scale()) {
      throw ConsistencyError("certify_simplex: Perron weights miss D w = e by " +
                             std::to_string(residual));
    }
    if (sc.gram_rank != n - 1) {
      throw ConsistencyError("certify_simplex: irreducible Delta but Gram rank " +
                             std::to_string(sc.gram_rank) + " != n - 1");
    }
    sc.is_simplex = true;
  } else {
    sc.basis = SimplexBasis::rank_only;
    sc.lambda_max = eig(delta, tol).values(0);
    sc.w = cert.w;
    sc.is_simplex = sc.gram_rank == n - 1;
  }
  sc.origin = sc.w.size() > 0 && sc.w.minCoeff() > tol.sign ? OriginPosition::relative_interior
                                                            : OriginPosition::relative_boundary;
  return sc;
}

Decomposition kuperberg_decompose(const Edm& d) {
  const auto cert = require_unit_spherical(d, "kuperberg_decompose");
  const Index n = d.order();
  const Index r = d.embedding_dim();
  if (n - r < 2 || n - r > r) {
    throw PreconditionError("kuperberg_decompose: needs 2 <= n - r <= r, got n = " +
                            std::to_string(n) + ", r = " + std::to_string(r));
  }
  require_min_distance_two(d, "kuperberg_decompose");
  const auto& tol = d.tolerances();
  const auto delta = clean_delta(d);
  const auto split = components(support_graph(delta, tol.support));

  if (static_cast<Index>(split.nontrivial.size()) != n - r) {
    throw ConsistencyError("kuperberg_decompose: Delta has " +
                           std::to_string(split.nontrivial.size()) +
                           " irreducible blocks, expected n - r = " + std::to_string(n - r));
  }

  Decomposition dec;
  dec.embedding_dim = r;
  dec.isolated = split.isolated;
  std::vector<std::vector<Index>> groups = split.nontrivial;
  if (!split.isolated.empty()) {
    groups.back().insert(groups.back().end(), split.isolated.begin(), split.isolated.end());
    dec.isolated_block = static_cast<Index>(groups.size()) - 1;
  }

  Index dim_sum = 0;
  for (auto& idx : groups) {
    auto sub = d.principal(idx);
    auto sc = certify_simplex(sub);
    if (!sc.is_simplex) {
      throw ConsistencyError("kuperberg_decompose: block starting at node " +
                             std::to_string(idx.front() + 1) + " is not a simplex");
    }
    const Index dim = static_cast<Index>(idx.size()) - 1;
    dim_sum += dim;
    dec.permutation.insert(dec.permutation.end(), idx.begin(), idx.end());
    dec.blocks.push_back(DecompositionBlock{std::move(idx), std::move(sub), std::move(sc), dim});
  }
  if (dim_sum != r) {
    throw ConsistencyError("kuperberg_decompose: block dimensions sum to " +
                           std::to_string(dim_sum) + ", expected " + std::to_string(r));
  }

  std::vector<Index> block_of(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    for (Index i : dec.blocks[b].indices) block_of[static_cast<std::size_t>(i)] = static_cast<Index>(b);
  }
  const auto gf = gram_factor(d, cert.w / cert.w.sum());
  const Eigen::MatrixXd inner = gf.config * gf.config.transpose();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (block_of[static_cast<std::size_t>(i)] == block_of[static_cast<std::size_t>(j)]) continue;
      dec.cross_check = std::max(dec.cross_check, std::abs(d(i, j) - 2.0));
      dec.cross_gram = std::max(dec.cross_gram, std::abs(inner(i, j)));
    }
  }
  if (dec.cross_check > tol.sign) {
    throw ConsistencyError("kuperberg_decompose: cross-block distance deviates from 2 by " +
                           std::to_string(dec.cross_check));
  }
  return dec;
}

RankinCheck rankin_codimension2_check(const Edm& d) {
  require_unit_spherical(d, "rankin_codimension2_check");
  const Index n = d.order();
  if (n != d.embedding_dim() + 2) {
    throw PreconditionError("rankin_codimension2_check: needs n = r + 2, got n = " +
                            std::to_string(n) + ", r = " + std::to_string(d.embedding_dim()));
  }
  RankinCheck rc;
  rc.min_offdiag = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (d(i, j) < rc.min_offdiag) {
        rc.min_offdiag = d(i, j);
        rc.i = i;
        rc.j = j;
      }
    }
  }
  rc.holds = rc.min_offdiag <= 2.0 + d.tolerances().sign;
  rc.alarm = !rc.holds;
  return rc;
}

CrosspolytopeResult crosspolytope_recognize(const Edm& d) {
  require_unit_spherical(d, "crosspolytope_recognize");
  const Index n = d.order();
  const Index r = d.embedding_dim();
  if (n != 2 * r) {
    throw PreconditionError("crosspolytope_recognize: needs n = 2r, got n = " + std::to_string(n) +
                            ", r = " + std::to_string(r));
  }
  require_min_distance_two(d, "crosspolytope_recognize");
  const double tau = d.tolerances().sign;

  CrosspolytopeResult res;
  if (r == 1) {
    // An antipodal pair; the decomposition needs n - r >= 2.
    res.permutation = {0, 1};
    res.recognized = std::abs(d(0, 1) - 4.0) <= tau;
    if (!res.recognized) {
      res.failed_block = 0;
      res.alarm = true;
      res.detail = "two unit points at squared distance " + std::to_string(d(0, 1));
    }
    return res;
  }

  const auto dec = kuperberg_decompose(d);
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const auto& idx = dec.blocks[b].indices;
    if (idx.size() != 2 || std::abs(d(idx[0], idx[1]) - 4.0) > tau) {
      res.failed_block = static_cast<Index>(b);
      res.alarm = true;
      res.detail = "block " + std::to_string(b + 1) + " has order " + std::to_string(idx.size()) +
                   "; a valid input cannot produce this";
      return res;
    }
  }
  res.recognized = true;
  res.permutation = dec.permutation;
  return res;
}

}  // namespace edmsphere
