#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equipart/graph.hpp"
#include "equipart/verify.hpp"

namespace equipart {

enum class ColoringKind { proper, acyclic };

// k colour classes (some possibly empty) partitioning V(G).
struct Coloring {
  ColoringKind kind = ColoringKind::proper;
  std::vector<VertexSet> classes;

  std::size_t colors() const noexcept { return classes.size(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class SearchStatus { found, none, budget_exhausted };

struct ColoringSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;  // decision nodes visited
};

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

// Backtracking over vertices in descending-degree order (ties by id), colours
// ascending. A branch is cut on a proper-colouring conflict or, for the
// acyclic variant, on closing a two-coloured cycle. `budget` caps decision
// nodes.
ColoringSearch exact_acyclic_coloring(const Graph& g, int k,
                                      std::uint64_t budget = kDefaultColoringBudget);
ColoringSearch exact_proper_coloring(const Graph& g, int k,
                                     std::uint64_t budget = kDefaultColoringBudget);

// Checks that the classes partition V(G), that each class is independent
// and, for acyclic colourings, that every pair of classes induces a forest.
Report validate_coloring(const Graph& g, const Coloring& c);

// Stricter pairwise condition: every pair of classes induces a linear forest.
Report validate_linear_coloring(const Graph& g, const Coloring& c);

}  // namespace equipart
