#include "equipart/verify.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "degree_buckets.hpp"
#include "equipart/errors.hpp"

namespace equipart {
namespace {

// Membership mask for `part`, ignoring ids outside the graph.
std::vector<char> mask_of(const Graph& g, std::span<const Vertex> part) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : part) {
    if (g.contains(v)) in[v] = 1;
  }
  return in;
}

std::vector<Vertex> sorted_members(const Graph& g, std::span<const Vertex> part) {
  std::vector<Vertex> out;
  for (Vertex v : part) {
    if (g.contains(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Peels vertices of induced degree <= d until none is left; returns the
// peeling order and the survivors (the d+1 core).
struct PeelResult {
  int degeneracy = 0;
  std::vector<Vertex> order;
};

PeelResult peel(const Graph& g, std::span<const Vertex> members, const std::vector<char>& in) {
  detail::DegreeBuckets buckets(g.order());
  for (Vertex v : members) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += in[w];
    buckets.insert(v, d);
  }
  PeelResult result;
  result.order.reserve(members.size());
  for (std::size_t step = 0; step < members.size(); ++step) {
    const int d = buckets.lowest_nonempty();
    const Vertex v = *buckets.bucket(d).begin();
    result.degeneracy = std::max(result.degeneracy, d);
    result.order.push_back(v);
    buckets.erase(v);
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && buckets.present(w)) buckets.change(w, -1);
    }
  }
  return result;
}

}  // namespace

bool Report::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Witness& Report::witness() const noexcept {
  static const Witness none;
  for (const auto& c : checks) {
    if (!c.pass) return c.witness;
  }
  return none;
}

void Report::add(std::string name, Witness failure) {
  const bool ok = std::holds_alternative<std::monostate>(failure);
  checks.push_back({std::move(name), ok, std::move(failure)});
}

std::string to_string(const PartConstraint& c) {
  switch (c.kind) {
    case ConstraintKind::degenerate:
      return std::to_string(c.d) + "-degenerate";
    case ConstraintKind::forest:
      return "forest";
    case ConstraintKind::linear_forest:
      return "linear-forest";
    case ConstraintKind::independent:
      return "independent";
    case ConstraintKind::bipartite:
      return "bipartite";
    case ConstraintKind::unconstrained:
      return "any";
  }
  return "?";
}

PartConstraint parse_constraint(std::string_view text) {
  auto parse_d = [&](std::string_view digits) {
    int d = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || d < 0) {
      throw BadSpec("bad degeneracy bound in '" + std::string(text) + "'");
    }
    return PartConstraint::degenerate(d);
  };
  if (text == "forest") return PartConstraint::forest();
  if (text == "linear-forest" || text == "linear_forest") return PartConstraint::linear_forest();
  if (text == "independent") return PartConstraint::independent();
  if (text == "bipartite") return PartConstraint::bipartite();
  if (text == "any" || text == "unconstrained") return PartConstraint::any();
  if (text.starts_with("degenerate:")) return parse_d(text.substr(11));
  if (text.ends_with("-degenerate")) return parse_d(text.substr(0, text.size() - 11));
  if (text.ends_with("deg")) return parse_d(text.substr(0, text.size() - 3));
  throw BadSpec("unknown part constraint '" + std::string(text) + "'");
}

PartitionSpec PartitionSpec::uniform(int parts, PartConstraint c, bool equitable) {
  if (parts < 1) throw BadSpec("a partition spec needs at least one part");
  if (c.kind == ConstraintKind::degenerate && c.d < 0) throw BadSpec("negative degeneracy bound");
  return {std::vector<PartConstraint>(static_cast<std::size_t>(parts), c), equitable};
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  const std::vector<char> in(static_cast<std::size_t>(g.order()), 1);
  auto peeled = peel(g, all, in);
  return {peeled.degeneracy, std::move(peeled.order)};
}

int induced_degeneracy(const Graph& g, std::span<const Vertex> part) {
  const auto members = sorted_members(g, part);
  return peel(g, members, mask_of(g, members)).degeneracy;
}

std::optional<DenseCoreWitness> dense_core(const Graph& g, std::span<const Vertex> part, int d) {
  const auto members = sorted_members(g, part);
  auto in = mask_of(g, members);
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue;
  for (Vertex v : members) {
    for (Vertex w : g.neighbors(v)) deg[v] += in[w];
    if (deg[v] <= d) queue.push_back(v);
  }
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : queue) removed[v] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    in[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && !removed[w] && --deg[w] <= d) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  DenseCoreWitness witness{{}, d};
  for (Vertex v : members) {
    if (!removed[v]) witness.core.push_back(v);
  }
  if (witness.core.empty()) return std::nullopt;
  return witness;
}

std::optional<CycleWitness> find_cycle(const Graph& g, std::span<const Vertex> part) {
  const auto members = sorted_members(g, part);
  const auto in = mask_of(g, members);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;

  for (Vertex root : members) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto nbrs = g.neighbors(u);
      if (next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nbrs[next++];
      if (!in[w] || w == parent[u]) continue;
      if (seen[w]) {
        // First non-tree edge always closes onto an ancestor of u.
        CycleWitness witness;
        for (Vertex x = u; x != w; x = parent[x]) witness.cycle.push_back(x);
        witness.cycle.push_back(w);
        std::reverse(witness.cycle.begin(), witness.cycle.end());
        return witness;
      }
      seen[w] = 1;
      parent[w] = u;
      stack.push_back({w, 0});
    }
  }
  return std::nullopt;
}

std::optional<CycleWitness> find_odd_cycle(const Graph& g, std::span<const Vertex> part) {
  const auto members = sorted_members(g, part);
  const auto in = mask_of(g, members);
  std::vector<int> depth(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);

  for (Vertex root : members) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (!in[w]) continue;
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if ((depth[w] & 1) == (depth[u] & 1)) {
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          // left ends at the common ancestor, right ends there too.
          right.pop_back();
          CycleWitness witness{std::move(left)};
          witness.cycle.insert(witness.cycle.end(), right.rbegin(), right.rend());
          return witness;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<EdgeWitness> find_edge(const Graph& g, std::span<const Vertex> part) {
  const auto members = sorted_members(g, part);
  const auto in = mask_of(g, members);
  for (Vertex u : members) {
    for (Vertex w : g.neighbors(u)) {
      if (w > u && in[w]) return EdgeWitness{{u, w}};
    }
  }
  return std::nullopt;
}

std::optional<DegreeWitness> find_degree_above(const Graph& g, std::span<const Vertex> part,
                                               int max_degree) {
  const auto members = sorted_members(g, part);
  const auto in = mask_of(g, members);
  for (Vertex u : members) {
    int d = 0;
    for (Vertex w : g.neighbors(u)) d += in[w];
    if (d > max_degree) return DegreeWitness{u, d};
  }
  return std::nullopt;
}

Witness check_part(const Graph& g, std::span<const Vertex> part, const PartConstraint& c) {
  switch (c.kind) {
    case ConstraintKind::degenerate:
      if (auto w = dense_core(g, part, c.d)) return *w;
      return {};
    case ConstraintKind::forest:
      if (auto w = find_cycle(g, part)) return *w;
      return {};
    case ConstraintKind::linear_forest:
      if (auto w = find_degree_above(g, part, 2)) return *w;
      if (auto w = find_cycle(g, part)) return *w;
      return {};
    case ConstraintKind::independent:
      if (auto w = find_edge(g, part)) return *w;
      return {};
    case ConstraintKind::bipartite:
      if (auto w = find_odd_cycle(g, part)) return *w;
      return {};
    case ConstraintKind::unconstrained:
      return {};
  }
  return {};
}

Report check_partition(const Graph& g, std::span<const VertexSet> parts,
                       const PartitionSpec& spec) {
  Report report;

  Witness membership;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& part : parts) {
    for (Vertex v : part) {
      if (!g.contains(v)) {
        membership = MembershipWitness{v, MembershipWitness::Problem::out_of_range};
        break;
      }
      if (seen[v]) {
        membership = MembershipWitness{v, MembershipWitness::Problem::repeated};
        break;
      }
      seen[v] = 1;
    }
    if (!std::holds_alternative<std::monostate>(membership)) break;
  }
  if (std::holds_alternative<std::monostate>(membership)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!seen[v]) {
        membership = MembershipWitness{v, MembershipWitness::Problem::missing};
        break;
      }
    }
  }
  report.add("partition", std::move(membership));

  report.add("part_count", parts.size() == spec.part_count()
                               ? Witness{}
                               : Witness{CountWitness{spec.part_count(), parts.size()}});

  if (spec.equitable && !parts.empty()) {
    std::size_t hi = 0;
    std::size_t lo = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i].size() > parts[hi].size()) hi = i;
      if (parts[i].size() < parts[lo].size()) lo = i;
    }
    Witness imbalance;
    if (parts[hi].size() > parts[lo].size() + 1) {
      imbalance = ImbalanceWitness{static_cast<int>(hi), parts[hi].size(),
                                   static_cast<int>(lo), parts[lo].size()};
    }
    report.add("equitable", std::move(imbalance));
  }

  const std::size_t checked = std::min(parts.size(), spec.part_count());
  for (std::size_t i = 0; i < checked; ++i) {
    const auto& constraint = spec.constraints[i];
    if (constraint.kind == ConstraintKind::unconstrained) continue;
    report.add("part_" + std::to_string(i) + ":" + to_string(constraint),
               check_part(g, parts[i], constraint));
  }
  return report;
}

std::optional<TriangleWitness> find_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      // Sorted-list intersection restricted to ids above v.
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          return TriangleWitness{{u, v, *a}};
        }
      }
    }
  }
  return std::nullopt;
}

bool witness_holds(const Graph& g, const Witness& w, std::span<const Vertex> part) {
  const bool restrict = !part.empty();
  const auto in = mask_of(g, part);
  auto inside = [&](Vertex v) { return g.contains(v) && (!restrict || in[v]); };

  return std::visit(
      [&](const auto& wit) -> bool {
        using T = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return false;
        } else if constexpr (std::is_same_v<T, CycleWitness>) {
          const auto& c = wit.cycle;
          if (c.size() < 3) return false;
          auto sorted = c;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
          for (std::size_t i = 0; i < c.size(); ++i) {
            if (!inside(c[i]) || !g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, DenseCoreWitness>) {
          if (wit.core.empty()) return false;
          for (Vertex v : wit.core) {
            if (!inside(v) || neighbors_in(g, v, wit.core) <= wit.d) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, ImbalanceWitness>) {
          return wit.larger_size >= wit.smaller_size + 2;
        } else if constexpr (std::is_same_v<T, TriangleWitness>) {
          const auto& [a, b, c] = wit.vertices;
          return a != b && b != c && a != c && g.has_edge(a, b) && g.has_edge(b, c) &&
                 g.has_edge(a, c);
        } else if constexpr (std::is_same_v<T, EdgeWitness>) {
          return inside(wit.edge.u) && inside(wit.edge.v) && g.has_edge(wit.edge.u, wit.edge.v);
        } else if constexpr (std::is_same_v<T, DegreeWitness>) {
          if (!inside(wit.vertex)) return false;
          int d = 0;
          for (Vertex x : g.neighbors(wit.vertex)) d += inside(x) ? 1 : 0;
          return d == wit.degree;
        } else if constexpr (std::is_same_v<T, MembershipWitness>) {
          return (wit.problem == MembershipWitness::Problem::out_of_range) != g.contains(wit.vertex);
        } else {
          return wit.expected != wit.actual;
        }
      },
      w);
}

}  // namespace equipart
