#pragma once

#include "equipart/graph.hpp"
#include "equipart/partition.hpp"

namespace equipart {

struct ReplayOptions {
  // Re-verify equitability and every part's degeneracy bound after each
  // replay step; throws InvariantViolation on the first failure. Quadratic,
  // meant for tests.
  bool check_each_step = false;
};

// Equitable 2-partition of a planar graph into 3-degenerate parts.
// Throws NoLowDegreeVertex or RepairFailed on non-planar input.
Partition partition_2x3deg(const Graph& g, ReplayOptions options = {});

// Equitable 3-partition of a planar graph into 2-degenerate parts.
Partition partition_3x2deg(const Graph& g, ReplayOptions options = {});

// Equitable 2-partition of a triangle-free planar graph into 2-degenerate
// parts. Throws StructureClaimViolated on other inputs.
Partition partition_2x2deg_trifree(const Graph& g, ReplayOptions options = {});

}  // namespace equipart
