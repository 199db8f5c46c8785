#include "equipart/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "equipart/errors.hpp"

namespace equipart {
namespace {

// Union-find with undo: union by size, no path compression, every union
// pushed onto a history stack so backtracking can pop it.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
  }

  std::size_t mark() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const int b = history_.back();
      history_.pop_back();
      const int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class ColoringSearcher {
 public:
  ColoringSearcher(const Graph& g, int k, bool acyclic, std::uint64_t budget)
      : g_(g), k_(k), acyclic_(acyclic), budget_(budget),
        color_(static_cast<std::size_t>(g.order()), -1) {
    order_.resize(static_cast<std::size_t>(g.order()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    if (acyclic_) {
      for (int i = 0; i < k * k; ++i) pair_forests_.emplace_back(static_cast<std::size_t>(g.order()));
    }
  }

  ColoringSearch run() {
    ColoringSearch result;
    if (k_ < 1) {
      result.status = g_.order() == 0 ? SearchStatus::found : SearchStatus::none;
    } else {
      result.status = search(0, -1);
    }
    result.nodes = nodes_;
    if (result.status == SearchStatus::found) {
      Coloring c;
      c.kind = acyclic_ ? ColoringKind::acyclic : ColoringKind::proper;
      c.classes.resize(static_cast<std::size_t>(std::max(k_, 0)));
      for (Vertex v = 0; v < g_.order(); ++v) c.classes[color_[v]].push_back(v);
      result.coloring = std::move(c);
    }
    return result;
  }

 private:
  RollbackUnionFind& forest(int a, int b) {
    if (a > b) std::swap(a, b);
    return pair_forests_[static_cast<std::size_t>(a * k_ + b)];
  }

  bool admissible(Vertex v, int c) {
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] == c) return false;
    }
    if (!acyclic_) return true;
    for (int other = 0; other < k_; ++other) {
      if (other == c) continue;
      auto& uf = forest(c, other);
      roots_.clear();
      for (Vertex w : g_.neighbors(v)) {
        if (color_[w] == other) roots_.push_back(uf.find(w));
      }
      std::sort(roots_.begin(), roots_.end());
      if (std::adjacent_find(roots_.begin(), roots_.end()) != roots_.end()) return false;
    }
    return true;
  }

  SearchStatus search(std::size_t depth, int max_used) {
    if (depth == order_.size()) return SearchStatus::found;
    const Vertex v = order_[depth];
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (++nodes_ > budget_) return SearchStatus::budget_exhausted;
      if (!admissible(v, c)) continue;

      std::vector<std::size_t> marks;
      if (acyclic_) {
        marks.reserve(static_cast<std::size_t>(k_));
        for (int other = 0; other < k_; ++other) {
          if (other == c) {
            marks.push_back(0);
            continue;
          }
          auto& uf = forest(c, other);
          marks.push_back(uf.mark());
          for (Vertex w : g_.neighbors(v)) {
            if (color_[w] == other) uf.unite(v, w);
          }
        }
      }
      color_[v] = c;

      const auto status = search(depth + 1, std::max(max_used, c));
      if (status != SearchStatus::none) return status;

      color_[v] = -1;
      if (acyclic_) {
        for (int other = 0; other < k_; ++other) {
          if (other != c) forest(c, other).rollback(marks[other]);
        }
      }
    }
    return SearchStatus::none;
  }

  const Graph& g_;
  int k_;
  bool acyclic_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<Vertex> order_;
  std::vector<RollbackUnionFind> pair_forests_;
  std::vector<int> roots_;
};

Report validate_classes(const Graph& g, const Coloring& c, PartConstraint pair_constraint,
                        bool check_pairs) {
  Report report;
  const PartitionSpec membership_only{
      std::vector<PartConstraint>(c.classes.size(), PartConstraint::independent()), false};
  // Membership and per-class independence come straight from the partition
  // checker; the part-count check is dropped because any k is allowed.
  for (auto& check : check_partition(g, c.classes, membership_only).checks) {
    if (check.name == "part_count") continue;
    report.checks.push_back(std::move(check));
  }
  if (!check_pairs) return report;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < c.classes.size(); ++j) {
      VertexSet both = c.classes[i];
      both.insert(both.end(), c.classes[j].begin(), c.classes[j].end());
      std::sort(both.begin(), both.end());
      report.add("classes_" + std::to_string(i) + "_" + std::to_string(j) + ":" +
                     to_string(pair_constraint),
                 check_part(g, both, pair_constraint));
    }
  }
  return report;
}

}  // namespace

ColoringSearch exact_acyclic_coloring(const Graph& g, int k, std::uint64_t budget) {
  return ColoringSearcher(g, k, true, budget).run();
}

ColoringSearch exact_proper_coloring(const Graph& g, int k, std::uint64_t budget) {
  return ColoringSearcher(g, k, false, budget).run();
}

Report validate_coloring(const Graph& g, const Coloring& c) {
  return validate_classes(g, c, PartConstraint::forest(), c.kind == ColoringKind::acyclic);
}

Report validate_linear_coloring(const Graph& g, const Coloring& c) {
  return validate_classes(g, c, PartConstraint::linear_forest(), true);
}

}  // namespace equipart
