#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "edmsphere/sym_matrix.hpp"
#include "edmsphere/tolerances.hpp"

namespace edmsphere {

/// Simple undirected graph. Nodes are 0-based internally; text formats and
/// reports use 1-based labels.
class Graph {
public:
  using Edge = std::pair<Index, Index>;

  /// Throws PreconditionError on out-of-range endpoints, self-loops or
  /// duplicate edges. Endpoints may come in either order.
  Graph(Index node_count, std::vector<Edge> edges);

  Index node_count() const { return n_; }
  /// Sorted, each with first < second.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Index i, Index j) const;
  const std::vector<Index>& neighbors(Index i) const { return adj_[static_cast<std::size_t>(i)]; }

private:
  Index n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> adj_;
};

/// Edge-list text: first line `n`, then lines `i j` with 1 <= i < j <= n.
/// `#` comments. Throws ParseError with line numbers.
Graph parse_graph(std::string_view text);

struct ComponentSplit {
  /// All components, ordered by smallest member, members ascending.
  std::vector<std::vector<Index>> components;
  /// Components with at least two nodes, same ordering.
  std::vector<std::vector<Index>> nontrivial;
  Index nontrivial_count = 0;  // k
  std::vector<Index> isolated;
  /// permutation[new_position] = original node: nontrivial components
  /// contiguous in order, isolated nodes last.
  std::vector<Index> permutation;
};

ComponentSplit components(const Graph& g);

SymMatrix adjacency(const Graph& g);

/// Graph on the off-diagonal entries with M_ij > threshold.
Graph support_graph(const SymMatrix& m, double threshold);

/// Connectivity of the support graph (threshold tol.support). A 1x1 matrix
/// is irreducible iff nonzero. Throws PreconditionError on a negative entry.
bool is_irreducible(const SymMatrix& m, const Tolerances& tol = {});

/// Slow reference: (I + S)^(n-1) > 0 for the 0/1 support S, evaluated by
/// boolean matrix products. Same conventions as is_irreducible.
bool is_irreducible_by_matrix_power(const SymMatrix& m, const Tolerances& tol = {});

}  // namespace edmsphere
