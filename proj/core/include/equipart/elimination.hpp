#pragma once

#include <string>
#include <variant>
#include <vector>

#include "equipart/graph.hpp"

namespace equipart {

// Edge v-v1 removed while deg(v) was between 1 and 5.
struct EdgeStep {
  Vertex v = -1;
  Vertex v1 = -1;
  friend bool operator==(const EdgeStep&, const EdgeStep&) = default;
};

// Vertex of degree at most 2 removed.
struct LowVertexStep {
  Vertex v = -1;
  friend bool operator==(const LowVertexStep&, const LowVertexStep&) = default;
};

// Adjacent u and v removed together while deg(u) = 3 and deg(v) <= 6.
struct PairStep {
  Vertex u = -1;
  Vertex v = -1;
  friend bool operator==(const PairStep&, const PairStep&) = default;
};

using EliminationStep = std::variant<EdgeStep, LowVertexStep, PairStep>;

struct EliminationSequence {
  std::vector<EliminationStep> steps;
  friend bool operator==(const EliminationSequence&, const EliminationSequence&) = default;
};

// Peels every edge of a planar graph. Each step takes the lowest-id vertex v
// of minimum positive degree and its lowest-id neighbour. Throws
// NoLowDegreeVertex when every non-isolated vertex has degree >= 6.
EliminationSequence edge_elimination_sequence(const Graph& g);

// Peels a triangle-free planar graph down to nothing: a vertex of degree <= 2
// when one exists, otherwise an edge uv with deg(u) = 3 and deg(v) <= 6.
// Throws StructureClaimViolated when neither exists.
EliminationSequence trifree_elimination_sequence(const Graph& g);

// One JSON object per line, e.g. {"kind":"edge","v":0,"v1":1}.
std::string to_json_lines(const EliminationSequence& seq);

}  // namespace equipart
