#include "equipart/generators.hpp"

#include <array>
#include <random>
#include <set>

#include "equipart/errors.hpp"

namespace equipart {
namespace {

// mt19937_64 is fully specified by the standard; the bounded draw is done
// here rather than through a distribution so output is identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

using Face = std::array<Vertex, 3>;

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Triangulation {
  int n = 0;
  std::vector<Face> faces;
  std::set<Edge> edges;

  Graph graph() const {
    const std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(n, list);
  }
};

Triangulation stacked(int n, Rng& rng) {
  Triangulation t;
  t.n = n;
  // Inner and outer face of the starting triangle.
  t.faces = {{0, 1, 2}, {0, 1, 2}};
  t.edges = {{0, 1}, {0, 2}, {1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    const auto f = static_cast<std::size_t>(rng.below(t.faces.size()));
    const auto [a, b, c] = t.faces[f];
    t.edges.insert(ordered(a, v));
    t.edges.insert(ordered(b, v));
    t.edges.insert(ordered(c, v));
    t.faces[f] = {a, b, v};
    t.faces.push_back({a, c, v});
    t.faces.push_back({b, c, v});
  }
  return t;
}

void flip(Triangulation& t, int flips, Rng& rng) {
  const long max_attempts = 50L * flips + 100;
  int done = 0;
  for (long attempt = 0; attempt < max_attempts && done < flips; ++attempt) {
    const auto f = static_cast<std::size_t>(rng.below(t.faces.size()));
    const auto side = static_cast<int>(rng.below(3));
    const Vertex a = t.faces[f][side];
    const Vertex b = t.faces[f][(side + 1) % 3];
    const Vertex c = t.faces[f][(side + 2) % 3];

    std::size_t g = t.faces.size();
    for (std::size_t i = 0; i < t.faces.size(); ++i) {
      if (i == f) continue;
      const auto& face = t.faces[i];
      const bool has_a = face[0] == a || face[1] == a || face[2] == a;
      const bool has_b = face[0] == b || face[1] == b || face[2] == b;
      if (has_a && has_b) {
        g = i;
        break;
      }
    }
    if (g == t.faces.size()) continue;
    const auto& other = t.faces[g];
    const Vertex d = other[0] != a && other[0] != b ? other[0]
                     : other[1] != a && other[1] != b ? other[1]
                                                      : other[2];
    if (c == d || t.edges.count(ordered(c, d)) > 0) continue;

    t.edges.erase(ordered(a, b));
    t.edges.insert(ordered(c, d));
    t.faces[f] = {a, c, d};
    t.faces[g] = {b, c, d};
    ++done;
  }
}

std::set<Edge> sparsify(std::set<Edge> edges, std::size_t target, Rng& rng) {
  std::vector<Edge> list(edges.begin(), edges.end());
  while (list.size() > target) {
    const auto i = static_cast<std::size_t>(rng.below(list.size()));
    list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return {list.begin(), list.end()};
}

std::set<Edge> break_triangles(int n, std::set<Edge> edges, Rng& rng) {
  for (;;) {
    const Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    std::vector<Face> triangles;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : g.neighbors(u)) {
        if (v <= u) continue;
        for (Vertex w : g.neighbors(v)) {
          if (w > v && g.has_edge(u, w)) triangles.push_back({u, v, w});
        }
      }
    }
    if (triangles.empty()) return edges;
    const auto& tri = triangles[rng.below(triangles.size())];
    const auto side = static_cast<int>(rng.below(3));
    edges.erase(ordered(tri[side], tri[(side + 1) % 3]));
  }
}

}  // namespace

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::stacked_triangulation:
      return "stacked_triangulation";
    case GenKind::flipped_triangulation:
      return "flipped_triangulation";
    case GenKind::planar_sparse:
      return "planar_sparse";
    case GenKind::triangle_free_planar:
      return "triangle_free_planar";
  }
  return "?";
}

GenKind parse_gen_kind(std::string_view text) {
  for (auto kind : {GenKind::stacked_triangulation, GenKind::flipped_triangulation,
                    GenKind::planar_sparse, GenKind::triangle_free_planar}) {
    auto name = to_string(kind);
    if (text == name) return kind;
    for (auto& ch : name) {
      if (ch == '_') ch = '-';
    }
    if (text == name) return kind;
  }
  throw BadSpec("unknown generator kind '" + std::string(text) + "'");
}

Graph gen_planar(const GenSpec& spec) {
  if (spec.n < 3) throw BadSpec("generated planar graphs need n >= 3");
  if (spec.flips < 0) throw BadSpec("negative flip count");
  const auto max_edges = static_cast<std::size_t>(3 * spec.n - 6 > 3 ? 3 * spec.n - 6 : 3);
  if (spec.edges && (*spec.edges < 0 || static_cast<std::size_t>(*spec.edges) > max_edges)) {
    throw BadSpec("edge target must lie in 0.." + std::to_string(max_edges));
  }

  Rng rng(spec.seed);
  auto t = stacked(spec.n, rng);
  if (spec.kind == GenKind::stacked_triangulation) return t.graph();

  flip(t, spec.flips, rng);
  if (spec.kind == GenKind::flipped_triangulation) return t.graph();

  const std::size_t target =
      spec.edges ? static_cast<std::size_t>(*spec.edges)
                 : std::min(max_edges, static_cast<std::size_t>(2 * spec.n));
  auto edges = sparsify(std::move(t.edges), target, rng);
  if (spec.kind == GenKind::triangle_free_planar) edges = break_triangles(spec.n, std::move(edges), rng);
  return Graph(spec.n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(ordered(v, (v + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(ordered(i, (i + 1) % 5));          // outer 5-cycle
    edges.push_back({i, i + 5});                       // spokes
    edges.push_back(ordered(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph(10, edges);
}

Graph icosahedron_graph() {
  // Apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const Vertex up = 1 + i;
    const Vertex up_next = 1 + (i + 1) % 5;
    const Vertex low = 6 + i;
    const Vertex low_next = 6 + (i + 1) % 5;
    edges.push_back({0, up});
    edges.push_back(ordered(up, up_next));
    edges.push_back({up, low});
    edges.push_back(ordered(up_next, low));
    edges.push_back(ordered(low, low_next));
    edges.push_back({low, 11});
  }
  return Graph(12, edges);
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      const Vertex w = v ^ (1 << bit);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(8, edges);
}

Graph prism_graph(int k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    edges.push_back(ordered(i, (i + 1) % k));
    edges.push_back(ordered(k + i, k + (i + 1) % k));
    edges.push_back({i, k + i});
  }
  return Graph(2 * k, edges);
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  }
  return Graph(rows * cols, edges);
}

}  // namespace equipart
