#pragma once

#include <optional>
#include <span>

#include "equipart/graph.hpp"
#include "equipart/partition.hpp"
#include "equipart/verify.hpp"

namespace equipart {

inline constexpr int kOraclePartitionMaxOrder = 12;
inline constexpr int kOracleMergeMaxTotal = 40;

// Exhaustive search over assignments of vertices to parts (equitable size
// profiles only when spec.equitable), pruning a branch as soon as a partial
// part breaks its constraint. Returns the first partition found in
// lexicographic assignment order. Throws InstanceTooLarge above 12 vertices.
std::optional<Partition> brute_partition_exists(const Graph& g, const PartitionSpec& spec);

// True iff there are `ell` disjoint sets, each of size >= target and each
// inside the union of at most two classes of the given sizes. Throws
// InstanceTooLarge when the sizes sum past 40.
bool merge_bound_tight(std::span<const int> class_sizes, int ell, int target);

}  // namespace equipart
