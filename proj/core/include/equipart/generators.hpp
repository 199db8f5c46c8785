#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "equipart/graph.hpp"

namespace equipart {

enum class GenKind {
  stacked_triangulation,  // repeated face insertion into a triangle
  flipped_triangulation,  // stacked, then random diagonal flips
  planar_sparse,          // flipped, then random edge deletions
  triangle_free_planar,   // planar_sparse, then one edge of every triangle removed
};

std::string to_string(GenKind kind);
GenKind parse_gen_kind(std::string_view text);  // throws BadSpec

struct GenSpec {
  GenKind kind = GenKind::stacked_triangulation;
  int n = 3;
  int flips = 0;                // successful diagonal flips to perform
  std::optional<int> edges;     // target edge count for the sparse kinds
  std::uint64_t seed = 0;
};

// Deterministic for a given spec. Throws BadSpec for n < 3, negative flips,
// or an edge target above 3n - 6.
Graph gen_planar(const GenSpec& spec);

// Classic small graphs used throughout the tests and examples.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph empty_graph(int n);
Graph petersen_graph();
Graph icosahedron_graph();
Graph cube_graph();
Graph prism_graph(int k);  // C_k x K_2
Graph grid_graph(int rows, int cols);

}  // namespace equipart
