#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "edmsphere/edm.hpp"
#include "edmsphere/graph.hpp"

namespace edmsphere {

/// Unit vectors with negative inner products exactly on edges and zero inner
/// products on non-edges, in the least possible dimension n - k.
struct OrthoRep {
  Graph graph;
  Index k = 0;          // nontrivial component count
  Index dimension = 0;  // d = n - k
  Eigen::MatrixXd points;  // n x d, row i is the vector of node i
  Edm edm;                 // D = 2(E - I) + 2 Delta
  DeltaMatrix delta;
  Eigen::VectorXd w;  // D w = e, empty for the degenerate case
  SymMatrix gram;     // B = I - Delta
  /// Set for the edgeless graph, which has no unit spherical EDM of this
  /// form; the representation is the standard basis.
  bool degenerate = false;
  std::string note;
};

/// Perron construction per nontrivial component: Delta^i = A^i / lambda_max,
/// xi padded with zeros at isolated nodes, w = xi / (2 e^T xi). Rows follow
/// the input node order. Throws ConsistencyError with a diagnostic list if
/// any post-construction check fails.
OrthoRep sinajova_construct(const Graph& g, const Tolerances& tol = {});

struct SignViolation {
  Index i = 0;
  Index j = 0;
  double value = 0.0;
  bool is_edge = false;
};

struct SignPatternReport {
  bool ok = true;
  std::vector<SignViolation> violations;
};

/// d_ij > 2 + tol.sign exactly on edges, |d_ij - 2| <= tol.sign on non-edges.
SignPatternReport verify_sign_pattern(const Edm& d, const Graph& g);

struct BlockTop {
  std::vector<Index> indices;
  double lambda_max = 0.0;
  Index contribution = 0;  // eigenvalues of the block at the global lambda_max
};

struct MinimalityReport {
  Index n = 0;
  Index k = 0;
  Index multiplicity = 0;         // sum of block contributions
  Index global_multiplicity = 0;  // from the whole Delta, cross-check
  double lambda_max = 0.0;
  Index embedding_dim = 0;  // n - multiplicity
  Index edm_dim = 0;        // Gram rank reported by the Edm
  std::vector<BlockTop> blocks;
  bool holds = false;  // every contribution <= 1, so multiplicity <= k
  bool tight = false;  // multiplicity == k
};

/// Any unit spherical EDM with the sign pattern of `g` has embedding
/// dimension at least n - k. Throws PreconditionError when `d` is not unit
/// spherical or fails the sign pattern.
MinimalityReport minimality_bound(const Edm& d, const Graph& g);

}  // namespace edmsphere
