#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equipart {

using Vertex = int;

// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the vertices 0..n-1. Immutable once built;
// algorithms that need to mutate work on private copies.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Duplicate edges collapse to one. Throws BadParameters for a self-loop or
  // an endpoint outside 0..n-1.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Builds a sorted duplicate-free set; throws OverlappingSets on a repeated id.
VertexSet make_vertex_set(std::vector<Vertex> members);

// Number of edges with one end in `a` and the other in `b`. Throws
// OverlappingSets if the sets intersect.
std::size_t edges_between(const Graph& g, std::span<const Vertex> a,
                          std::span<const Vertex> b);

// Number of neighbours of v inside `set` (v itself is never counted).
int neighbors_in(const Graph& g, Vertex v, std::span<const Vertex> set);

enum class GraphFormat { graph6, edge_list };

Graph parse_graph(std::string_view text, GraphFormat format);

// graph6 when the first line looks like graph6, edge list otherwise.
GraphFormat detect_format(std::string_view text);

// Largest order the single-byte graph6 size prefix can describe.
inline constexpr int kMaxGraph6Order = 62;

std::string to_graph6(const Graph& g);

// "n" on the first line followed by one "u v" line per edge, sorted.
std::string to_edge_list(const Graph& g);

}  // namespace equipart
