#pragma once

#include <cstddef>
#include <vector>

#include "equipart/graph.hpp"

namespace equipart {

// One swap performed while replaying an elimination sequence: `moved_out`
// left part `from_part` for `to_part`, and `moved_in` went the other way.
struct RepairEvent {
  std::size_t step = 0;
  int from_part = 0;
  int to_part = 0;
  Vertex moved_out = -1;
  Vertex moved_in = -1;

  friend bool operator==(const RepairEvent&, const RepairEvent&) = default;
};

struct Partition {
  std::vector<VertexSet> parts;
  std::vector<RepairEvent> trace;

  std::size_t part_count() const noexcept { return parts.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

}  // namespace equipart
