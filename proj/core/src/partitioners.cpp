#include "equipart/partitioners.hpp"

#include <algorithm>
#include <string>

#include "equipart/elimination.hpp"
#include "equipart/errors.hpp"
#include "equipart/verify.hpp"

namespace equipart {
namespace {

std::vector<VertexSet> collect_parts(const std::vector<int>& part_of, int part_count) {
  std::vector<VertexSet> parts(static_cast<std::size_t>(part_count));
  for (Vertex v = 0; v < static_cast<Vertex>(part_of.size()); ++v) {
    if (part_of[v] >= 0) parts[part_of[v]].push_back(v);
  }
  return parts;
}

void assert_step(const Graph& current, const std::vector<int>& part_of, int part_count,
                 int bound, std::size_t step) {
  const auto parts = collect_parts(part_of, part_count);
  const auto spec = PartitionSpec::uniform(part_count, PartConstraint::degenerate(bound), true);
  const auto [lo, hi] = std::minmax_element(
      parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (hi->size() > lo->size() + 1) {
    throw InvariantViolation("replay step " + std::to_string(step) + ": partition not equitable");
  }
  for (int i = 0; i < part_count; ++i) {
    if (!std::holds_alternative<std::monostate>(check_part(current, parts[i], spec.constraints[i]))) {
      throw InvariantViolation("replay step " + std::to_string(step) + ": part " +
                               std::to_string(i) + " exceeds degeneracy " +
                               std::to_string(bound));
    }
  }
}

// Re-adds the edges of an edge elimination sequence in reverse, starting
// from contiguous equitable blocks of ids. When the re-added edge vv1 leaves
// v with more than `bound` neighbours in its own part P, v is swapped with
// the lowest-id w from another part (parts scanned in index order) that has
// at most `bound` neighbours in P - v.
Partition replay_edge_elimination(const Graph& g, int part_count, int bound,
                                  const ReplayOptions& options) {
  const auto seq = edge_elimination_sequence(g);
  const int n = g.order();

  std::vector<int> part_of(static_cast<std::size_t>(n));
  {
    Vertex next = 0;
    for (int p = 0; p < part_count; ++p) {
      const int size = n / part_count + (p < n % part_count ? 1 : 0);
      for (int i = 0; i < size; ++i) part_of[next++] = p;
    }
  }

  std::vector<std::vector<Vertex>> current(static_cast<std::size_t>(n));
  auto count_in = [&](Vertex x, int part, Vertex skip) {
    int c = 0;
    for (Vertex y : current[x]) c += (y != skip && part_of[y] == part) ? 1 : 0;
    return c;
  };

  Partition result;
  std::vector<Edge> added;
  for (std::size_t idx = seq.steps.size(); idx-- > 0;) {
    const auto& [v, v1] = std::get<EdgeStep>(seq.steps[idx]);
    current[v].push_back(v1);
    current[v1].push_back(v);

    const int home = part_of[v];
    if (count_in(v, home, -1) > bound) {
      bool repaired = false;
      for (int other = 0; other < part_count && !repaired; ++other) {
        if (other == home) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (part_of[w] != other || count_in(w, home, v) > bound) continue;
          part_of[v] = other;
          part_of[w] = home;
          result.trace.push_back({idx, home, other, v, w});
          repaired = true;
          break;
        }
      }
      if (!repaired) {
        throw RepairFailed("replay step " + std::to_string(idx) + ": no swap partner for vertex " +
                               std::to_string(v) + "; the graph is not planar",
                           idx);
      }
    }

    if (options.check_each_step) {
      added.push_back({v, v1});
      assert_step(Graph(n, added), part_of, part_count, bound, idx);
    }
  }

  result.parts = collect_parts(part_of, part_count);
  return result;
}

}  // namespace

Partition partition_2x3deg(const Graph& g, ReplayOptions options) {
  return replay_edge_elimination(g, 2, 3, options);
}

Partition partition_3x2deg(const Graph& g, ReplayOptions options) {
  return replay_edge_elimination(g, 3, 2, options);
}

Partition partition_2x2deg_trifree(const Graph& g, ReplayOptions options) {
  constexpr int kBound = 2;
  const auto seq = trifree_elimination_sequence(g);
  const int n = g.order();
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  std::size_t sizes[2] = {0, 0};

  auto neighbours_in = [&](Vertex v, int part) {
    int c = 0;
    for (Vertex w : g.neighbors(v)) c += part_of[w] == part ? 1 : 0;
    return c;
  };
  auto place = [&](Vertex v, int part) {
    part_of[v] = part;
    ++sizes[part];
  };

  for (std::size_t idx = seq.steps.size(); idx-- > 0;) {
    if (const auto* low = std::get_if<LowVertexStep>(&seq.steps[idx])) {
      place(low->v, sizes[0] <= sizes[1] ? 0 : 1);
    } else {
      const auto& [u, v] = std::get<PairStep>(seq.steps[idx]);
      int target = -1;
      for (int p = 0; p < 2 && target < 0; ++p) {
        if (neighbours_in(v, p) <= kBound) target = p;
      }
      if (target < 0) {
        throw InvariantViolation("vertex " + std::to_string(v) +
                                 " has more than two neighbours in both parts");
      }
      place(v, target);
      place(u, 1 - target);
    }

    if (options.check_each_step) {
      // Vertices not yet re-inserted sit in no part and stay invisible.
      const auto parts = collect_parts(part_of, 2);
      const Graph& current = g;
      if (std::max(sizes[0], sizes[1]) > std::min(sizes[0], sizes[1]) + 1) {
        throw InvariantViolation("replay step " + std::to_string(idx) + ": not equitable");
      }
      for (int p = 0; p < 2; ++p) {
        if (dense_core(current, parts[p], kBound)) {
          throw InvariantViolation("replay step " + std::to_string(idx) + ": part " +
                                   std::to_string(p) + " is not 2-degenerate");
        }
      }
    }
  }

  Partition result;
  result.parts = collect_parts(part_of, 2);
  return result;
}

}  // namespace equipart
