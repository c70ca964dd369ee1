#include "edmsphere/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>
#include <string>

#include "edmsphere/errors.hpp"

namespace edmsphere {

Graph::Graph(Index node_count, std::vector<Edge> edges) : n_(node_count) {
  if (n_ < 1) throw PreconditionError("graph needs at least one node");
  for (auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
      throw PreconditionError("edge {" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                              "} out of range");
    }
    if (i == j) throw PreconditionError("self-loop at node " + std::to_string(i + 1));
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw PreconditionError("duplicate edge {" + std::to_string(dup->first + 1) + ", " +
                            std::to_string(dup->second + 1) + "}");
  }
  edges_ = std::move(edges);
  adj_.resize(static_cast<std::size_t>(n_));
  for (const auto& [i, j] : edges_) {
    adj_[static_cast<std::size_t>(i)].push_back(j);
    adj_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Index i, Index j) const {
  const auto& nb = adj_[static_cast<std::size_t>(i)];
  return std::binary_search(nb.begin(), nb.end(), j);
}

Graph parse_graph(std::string_view text) {
  Index n = -1;
  std::vector<Graph::Edge> edges;
  std::map<Graph::Edge, int> seen;  // edge -> first line
  int line_no = 0;
  std::size_t pos = 0;

  auto parse_int = [](const std::string& tok, int line) {
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') throw ParseError(line, "not an integer: '" + tok + "'");
    return static_cast<Index>(v);
  };

  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    auto line = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++line_no;
    if (auto c = line.find('#'); c != std::string_view::npos) line = line.substr(0, c);

    std::istringstream is{std::string(line)};
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(t);
    if (toks.empty()) continue;

    if (n < 0) {
      if (toks.size() != 1) throw ParseError(line_no, "first line must contain only the node count");
      n = parse_int(toks[0], line_no);
      if (n < 1) throw ParseError(line_no, "node count must be positive");
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected an edge 'i j'");
    const Index i = parse_int(toks[0], line_no);
    const Index j = parse_int(toks[1], line_no);
    if (i < 1 || j < 1 || i > n || j > n) {
      throw ParseError(line_no, "node index out of range 1.." + std::to_string(n));
    }
    if (i == j) throw ParseError(line_no, "self-loop at node " + std::to_string(i));
    Graph::Edge e{std::min(i, j) - 1, std::max(i, j) - 1};
    if (auto [it, fresh] = seen.emplace(e, line_no); !fresh) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(e.first + 1) + ", " +
                                    std::to_string(e.second + 1) + "} (first on line " +
                                    std::to_string(it->second) + ")");
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(std::max(line_no, 1), "empty graph file");
  return Graph(n, std::move(edges));
}

ComponentSplit components(const Graph& g) {
  const Index n = g.node_count();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  ComponentSplit split;
  for (Index start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<Index> comp;
    std::deque<Index> queue{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      const Index u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Index v : g.neighbors(u)) {
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.size() >= 2) {
      split.nontrivial.push_back(comp);
    } else {
      split.isolated.push_back(comp.front());
    }
    split.components.push_back(std::move(comp));
  }
  split.nontrivial_count = static_cast<Index>(split.nontrivial.size());
  for (const auto& comp : split.nontrivial) {
    split.permutation.insert(split.permutation.end(), comp.begin(), comp.end());
  }
  split.permutation.insert(split.permutation.end(), split.isolated.begin(), split.isolated.end());
  return split;
}

SymMatrix adjacency(const Graph& g) {
  const Index n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [i, j] : g.edges()) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return SymMatrix::from_lower(a);
}

Graph support_graph(const SymMatrix& m, double threshold) {
  std::vector<Graph::Edge> edges;
  for (Index j = 0; j < m.order(); ++j) {
    for (Index i = j + 1; i < m.order(); ++i) {
      if (m(i, j) > threshold) edges.emplace_back(j, i);
    }
  }
  return Graph(m.order(), std::move(edges));
}

bool is_irreducible(const SymMatrix& m, const Tolerances& tol) {
  if (!m.is_nonnegative()) throw PreconditionError("is_irreducible: matrix has a negative entry");
  if (m.order() == 0) return false;
  if (m.order() == 1) return m(0, 0) != 0.0;
  const auto split = components(support_graph(m, tol.support));
  return split.components.size() == 1;
}

bool is_irreducible_by_matrix_power(const SymMatrix& m, const Tolerances& tol) {
  if (!m.is_nonnegative()) throw PreconditionError("is_irreducible: matrix has a negative entry");
  const Index n = m.order();
  if (n == 0) return false;
  if (n == 1) return m(0, 0) != 0.0;

  using Bool = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
  Bool step(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) step(i, j) = (i == j || m(i, j) > tol.support) ? 1 : 0;
  }
  Bool power = Bool::Identity(n, n);
  for (Index k = 0; k < n - 1; ++k) {
    power = (power * step).unaryExpr([](int v) { return v > 0 ? 1 : 0; });
  }
  return (power.array() > 0).all();
}

}  // namespace edmsphere
