#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "edmsphere/graph.hpp"
#include "edmsphere/tolerances.hpp"

namespace edmsphere::testing {

/// Eigen's self-adjoint solver, used as an independent oracle.
Eigen::VectorXd oracle_eigenvalues(const Eigen::MatrixXd& m);

/// Random symmetric matrix with entries uniform in [-1, 1].
Eigen::MatrixXd random_symmetric(Index n, std::mt19937_64& rng);

/// Random graph on n nodes, each pair an edge with probability p.
Graph random_graph(Index n, double p, std::mt19937_64& rng);

/// Random connected graph: a random spanning tree plus extra edges.
Graph random_connected_graph(Index n, double extra, std::mt19937_64& rng);

/// A unit spherical EDM assembled from simplex blocks.
///
/// Block b sits on `blocks[b]` (original 0-based labels). Its Delta is a
/// positive-weight connected support scaled to top eigenvalue 1; `isolated`
/// rows of Delta are zero. Cross entries are 2.
struct Composition {
  Eigen::MatrixXd d;
  std::vector<std::vector<Index>> blocks;  // component nodes, ascending
  std::vector<Index> isolated;             // ascending
  Index embedding_dim = 0;                 // sum of (order - 1), isolated count added to the last block
};

Composition random_composition(const std::vector<Index>& orders, Index isolated, std::mt19937_64& rng);

/// Blocks and isolated count drawn at random: block count in [min_blocks, max_blocks],
/// orders in [2, max_order], total order at most max_n.
Composition random_composition(Index min_blocks, Index max_blocks, Index max_order, Index max_n,
                               bool allow_isolated, std::mt19937_64& rng);

/// Expected decomposition blocks: components by smallest label, isolated appended to the last.
std::vector<std::vector<Index>> expected_blocks(const Composition& c);

}  // namespace edmsphere::testing
