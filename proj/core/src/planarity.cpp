// Left-right planarity test (de Fraysseix, Ossona de Mendez, Rosenstiehl),
// in the formulation of Brandes' "The Left-Right Planarity Test". Only the
// testing phase is implemented; no embedding is produced.

#include <algorithm>
#include <numeric>

#include "equipart/verify.hpp"

namespace equipart {
namespace {

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;
  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
  void swap() { std::swap(left, right); }
};

class LeftRightTest {
 public:
  explicit LeftRightTest(const Graph& g) : g_(g) {
    const auto edges = g.edges();
    const auto m = edges.size();
    incident_.resize(static_cast<std::size_t>(g.order()));
    ends_.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      incident_[edges[e].u].push_back(static_cast<int>(e));
      incident_[edges[e].v].push_back(static_cast<int>(e));
    }
    height_.assign(static_cast<std::size_t>(g.order()), kNone);
    parent_edge_.assign(static_cast<std::size_t>(g.order()), kNone);
    oriented_.assign(m, 0);
    lowpt_.assign(m, 0);
    lowpt2_.assign(m, 0);
    nesting_depth_.assign(m, 0);
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, 0);
    out_.resize(static_cast<std::size_t>(g.order()));
    edge_list_ = edges;
  }

  bool run() {
    std::vector<Vertex> roots;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }
    for (auto& out : out_) {
      std::stable_sort(out.begin(), out.end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    }
    for (Vertex root : roots) {
      if (!test(root)) return false;
    }
    return true;
  }

 private:
  Vertex source(int e) const { return ends_[e].first; }
  Vertex target(int e) const { return ends_[e].second; }

  void orient(Vertex v) {
    const int e = parent_edge_[v];
    for (int vw : incident_[v]) {
      if (oriented_[vw]) continue;
      oriented_[vw] = 1;
      const Vertex w = edge_list_[vw].u == v ? edge_list_[vw].v : edge_list_[vw].u;
      ends_[vw] = {v, w};
      out_[v].push_back(vw);
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_depth_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) nesting_depth_[vw] += 1;  // chordal
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool test(Vertex v) {
    const int e = parent_edge_[v];
    const auto& out = out_[v];
    for (int ei : out) {
      stack_bottom_[ei] = static_cast<int>(stack_.size());
      const Vertex w = target(ei);
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back({Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {
        if (ei == out.front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Merge return edges of ei into p.right.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (static_cast<int>(stack_.size()) != stack_bottom_[ei]);

    // Merge conflicting return edges of earlier siblings into p.left.
    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const Vertex u = source(e);
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      stack_.pop_back();
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && target(p.left.high) == u) {
        p.left.high = ref_[p.left.high];
      }
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && target(p.right.high) == u) {
        p.right.high = ref_[p.right.high];
      }
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  const Graph& g_;
  std::vector<Edge> edge_list_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<std::vector<int>> out_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<char> oriented_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_depth_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<int> stack_bottom_;
  std::vector<ConflictPair> stack_;
};

}  // namespace

bool is_planar(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t m = g.size();
  if (n < 5 || m < 9) return true;
  if (m > 3 * n - 6) return false;
  if (m > 2 * n - 4 && is_triangle_free(g)) return false;
  return LeftRightTest(g).run();
}

}  // namespace equipart
