#include "equipart/elimination.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "degree_buckets.hpp"
#include "equipart/errors.hpp"

namespace equipart {
namespace {

constexpr int kMaxEliminationDegree = 5;
constexpr int kPairLowDegree = 3;
constexpr int kPairHighDegree = 6;

// Residual graph with degree buckets, shrinking as steps are taken.
class Residual {
 public:
  explicit Residual(const Graph& g) : adjacency_(static_cast<std::size_t>(g.order())),
                                      buckets_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nbrs = g.neighbors(v);
      adjacency_[v] = std::set<Vertex>(nbrs.begin(), nbrs.end());
      buckets_.insert(v, g.degree(v));
    }
  }

  const detail::DegreeBuckets& buckets() const { return buckets_; }
  const std::set<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return buckets_.degree(v); }

  void remove_edge(Vertex u, Vertex v) {
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
    buckets_.change(u, -1);
    buckets_.change(v, -1);
  }

  void remove_vertex(Vertex v) {
    for (Vertex w : adjacency_[v]) {
      adjacency_[w].erase(v);
      buckets_.change(w, -1);
    }
    adjacency_[v].clear();
    buckets_.erase(v);
  }

 private:
  std::vector<std::set<Vertex>> adjacency_;
  detail::DegreeBuckets buckets_;
};

}  // namespace

EliminationSequence edge_elimination_sequence(const Graph& g) {
  Residual residual(g);
  EliminationSequence seq;
  seq.steps.reserve(g.size());
  for (std::size_t step = 0; step < g.size(); ++step) {
    const int d = residual.buckets().lowest_nonempty(1);
    if (d < 1 || d > kMaxEliminationDegree) {
      throw NoLowDegreeVertex("step " + std::to_string(step) +
                              ": every non-isolated vertex has degree >= 6; the graph is "
                              "not planar");
    }
    const Vertex v = *residual.buckets().bucket(d).begin();
    const Vertex v1 = *residual.neighbors(v).begin();
    seq.steps.emplace_back(EdgeStep{v, v1});
    residual.remove_edge(v, v1);
  }
  return seq;
}

EliminationSequence trifree_elimination_sequence(const Graph& g) {
  Residual residual(g);
  EliminationSequence seq;
  int remaining = g.order();
  while (remaining > 0) {
    const auto& buckets = residual.buckets();
    Vertex low = -1;
    for (int d = 0; d <= 2; ++d) {
      const auto& b = buckets.bucket(d);
      if (!b.empty() && (low < 0 || *b.begin() < low)) low = *b.begin();
    }
    if (low >= 0) {
      seq.steps.emplace_back(LowVertexStep{low});
      residual.remove_vertex(low);
      --remaining;
      continue;
    }

    std::optional<PairStep> pair;
    for (Vertex u : buckets.bucket(kPairLowDegree)) {
      for (Vertex v : residual.neighbors(u)) {
        if (residual.degree(v) <= kPairHighDegree) {
          pair = PairStep{u, v};
          break;
        }
      }
      if (pair) break;
    }
    if (!pair) {
      throw StructureClaimViolated(
          "minimum degree >= 3 and no edge joins a degree-3 vertex to a vertex of degree "
          "<= 6; the graph is not triangle-free planar");
    }
    seq.steps.emplace_back(*pair);
    residual.remove_vertex(pair->u);
    residual.remove_vertex(pair->v);
    remaining -= 2;
  }
  return seq;
}

}  // namespace equipart
