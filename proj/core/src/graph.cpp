#include "equipart/graph.hpp"

#include <algorithm>

#include "equipart/errors.hpp"

namespace equipart {

Graph::Graph(int n) {
  if (n < 0) throw BadParameters("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) {
      throw BadParameters("edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v) + " has an endpoint outside 0.." +
                          std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw BadParameters("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  std::size_t total = 0;
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    total += nbrs.size();
  }
  edge_count_ = total / 2;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nbrs : adjacency_) {
    best = std::max(best, static_cast<int>(nbrs.size()));
  }
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  auto dup = std::adjacent_find(members.begin(), members.end());
  if (dup != members.end()) {
    throw OverlappingSets("vertex " + std::to_string(*dup) +
                          " listed more than once");
  }
  return members;
}

std::size_t edges_between(const Graph& g, std::span<const Vertex> a,
                          std::span<const Vertex> b) {
  std::vector<char> in_b(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : b) {
    if (g.contains(v)) in_b[v] = 1;
  }
  std::size_t count = 0;
  for (Vertex u : a) {
    if (!g.contains(u)) continue;
    if (in_b[u]) {
      throw OverlappingSets("vertex " + std::to_string(u) +
                            " lies in both sets");
    }
    for (Vertex w : g.neighbors(u)) count += in_b[w];
  }
  return count;
}

int neighbors_in(const Graph& g, Vertex v, std::span<const Vertex> set) {
  int count = 0;
  for (Vertex w : set) {
    if (w != v && g.has_edge(v, w)) ++count;
  }
  return count;
}

}  // namespace equipart
