#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace edmsphere::testing {

Eigen::VectorXd oracle_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::MatrixXd random_symmetric(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

Graph random_graph(Index n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Graph::Edge> edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(Index n, double extra, std::mt19937_64& rng) {
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Graph::Edge> edges;
  for (Index v = 1; v < n; ++v) {
    std::uniform_int_distribution<Index> pick(0, v - 1);
    const Index a = order[static_cast<std::size_t>(v)];
    const Index b = order[static_cast<std::size_t>(pick(rng))];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::bernoulli_distribution coin(extra);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng) && std::find(edges.begin(), edges.end(), Graph::Edge{i, j}) == edges.end())
        edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Composition random_composition(const std::vector<Index>& orders, Index isolated, std::mt19937_64& rng) {
  const Index n = std::accumulate(orders.begin(), orders.end(), Index{0}) + isolated;
  std::vector<Index> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), Index{0});
  std::shuffle(labels.begin(), labels.end(), rng);

  Composition c;
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, n);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::size_t next = 0;
  for (const Index m : orders) {
    std::vector<Index> nodes(labels.begin() + static_cast<std::ptrdiff_t>(next),
                             labels.begin() + static_cast<std::ptrdiff_t>(next + static_cast<std::size_t>(m)));
    next += static_cast<std::size_t>(m);
    std::sort(nodes.begin(), nodes.end());
    const Graph g = random_connected_graph(m, 0.4, rng);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m, m);
    for (const auto& [a, b] : g.edges()) w(a, b) = w(b, a) = weight(rng);
    w /= oracle_eigenvalues(w).maxCoeff();
    for (Index a = 0; a < m; ++a)
      for (Index b = 0; b < m; ++b) delta(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)]) = w(a, b);
    c.embedding_dim += m - 1;
    c.blocks.push_back(std::move(nodes));
  }
  c.isolated.assign(labels.begin() + static_cast<std::ptrdiff_t>(next), labels.end());
  std::sort(c.isolated.begin(), c.isolated.end());
  c.embedding_dim += isolated;
  std::sort(c.blocks.begin(), c.blocks.end());
  c.d = 2.0 * (Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n)) + 2.0 * delta;
  return c;
}

Composition random_composition(Index min_blocks, Index max_blocks, Index max_order, Index max_n,
                               bool allow_isolated, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> count(min_blocks, max_blocks);
  std::uniform_int_distribution<Index> order(2, max_order);
  const Index b = count(rng);
  std::vector<Index> orders;
  Index total = 0;
  for (Index i = 0; i < b; ++i) {
    const Index room = max_n - total - 2 * (b - 1 - i);
    const Index m = std::min(order(rng), room);
    orders.push_back(m);
    total += m;
  }
  Index iso = 0;
  if (allow_isolated && max_n > total) {
    std::uniform_int_distribution<Index> extra(0, std::min<Index>(2, max_n - total));
    iso = extra(rng);
  }
  return random_composition(orders, iso, rng);
}

std::vector<std::vector<Index>> expected_blocks(const Composition& c) {
  auto blocks = c.blocks;
  blocks.back().insert(blocks.back().end(), c.isolated.begin(), c.isolated.end());
  return blocks;
}

}  // namespace edmsphere::testing
