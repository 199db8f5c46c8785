#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "equipart/graph.hpp"
#include "equipart/partition.hpp"

namespace equipart {

// Vertex list of a cycle, in traversal order; consecutive entries (and the
// last/first pair) are adjacent.
struct CycleWitness {
  std::vector<Vertex> cycle;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// Non-empty vertex set whose induced subgraph has minimum degree > d.
struct DenseCoreWitness {
  VertexSet core;
  int d = 0;
  friend bool operator==(const DenseCoreWitness&, const DenseCoreWitness&) = default;
};

struct ImbalanceWitness {
  int larger_part = 0;
  std::size_t larger_size = 0;
  int smaller_part = 0;
  std::size_t smaller_size = 0;
  friend bool operator==(const ImbalanceWitness&, const ImbalanceWitness&) = default;
};

struct TriangleWitness {
  std::array<Vertex, 3> vertices{};
  friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

// An edge that must not exist (inside an independent set or colour class).
struct EdgeWitness {
  Edge edge{};
  friend bool operator==(const EdgeWitness&, const EdgeWitness&) = default;
};

// A vertex whose degree inside its part exceeds the allowed maximum.
struct DegreeWitness {
  Vertex vertex = -1;
  int degree = 0;
  friend bool operator==(const DegreeWitness&, const DegreeWitness&) = default;
};

// A vertex that breaks the partition property.
struct MembershipWitness {
  enum class Problem { missing, repeated, out_of_range };
  Vertex vertex = -1;
  Problem problem = Problem::missing;
  friend bool operator==(const MembershipWitness&, const MembershipWitness&) = default;
};

struct CountWitness {
  std::size_t expected = 0;
  std::size_t actual = 0;
  friend bool operator==(const CountWitness&, const CountWitness&) = default;
};

using Witness = std::variant<std::monostate, CycleWitness, DenseCoreWitness,
                             ImbalanceWitness, TriangleWitness, EdgeWitness,
                             DegreeWitness, MembershipWitness, CountWitness>;

struct Check {
  std::string name;
  bool pass = true;
  Witness witness;
};

struct Report {
  std::vector<Check> checks;

  bool pass() const noexcept;
  // Witness of the first failing check, or monostate when everything passed.
  const Witness& witness() const noexcept;
  void add(std::string name, Witness failure = {});
};

enum class ConstraintKind {
  degenerate,
  forest,
  linear_forest,
  independent,
  bipartite,
  unconstrained,
};

struct PartConstraint {
  ConstraintKind kind = ConstraintKind::unconstrained;
  int d = 0;

  static PartConstraint degenerate(int d) { return {ConstraintKind::degenerate, d}; }
  static PartConstraint forest() { return {ConstraintKind::forest, 0}; }
  static PartConstraint linear_forest() { return {ConstraintKind::linear_forest, 0}; }
  static PartConstraint independent() { return {ConstraintKind::independent, 0}; }
  static PartConstraint bipartite() { return {ConstraintKind::bipartite, 0}; }
  static PartConstraint any() { return {ConstraintKind::unconstrained, 0}; }

  friend bool operator==(const PartConstraint&, const PartConstraint&) = default;
};

std::string to_string(const PartConstraint& c);

// Parses "3deg", "degenerate:3", "forest", "linear-forest", "independent",
// "bipartite", "any". Throws BadSpec.
PartConstraint parse_constraint(std::string_view text);

struct PartitionSpec {
  std::vector<PartConstraint> constraints;  // one per part
  bool equitable = false;

  static PartitionSpec uniform(int parts, PartConstraint c, bool equitable);
  std::size_t part_count() const noexcept { return constraints.size(); }
};

struct DegeneracyOrder {
  int degeneracy = 0;
  std::vector<Vertex> order;
};

// Min-degree peeling. Ties go to the lowest id.
DegeneracyOrder degeneracy_order(const Graph& g);

// Degeneracy of the subgraph induced by `part`.
int induced_degeneracy(const Graph& g, std::span<const Vertex> part);

// Individual part checks. Each returns nullopt on success or a failure
// witness that lies inside `part`.
std::optional<CycleWitness> find_cycle(const Graph& g, std::span<const Vertex> part);
std::optional<CycleWitness> find_odd_cycle(const Graph& g, std::span<const Vertex> part);
std::optional<DenseCoreWitness> dense_core(const Graph& g, std::span<const Vertex> part, int d);
std::optional<EdgeWitness> find_edge(const Graph& g, std::span<const Vertex> part);
std::optional<DegreeWitness> find_degree_above(const Graph& g, std::span<const Vertex> part,
                                               int max_degree);

// Verifies one part against one constraint.
Witness check_part(const Graph& g, std::span<const Vertex> part, const PartConstraint& c);

Report check_partition(const Graph& g, std::span<const VertexSet> parts,
                       const PartitionSpec& spec);
inline Report check_partition(const Graph& g, const Partition& p, const PartitionSpec& spec) {
  return check_partition(g, p.parts, spec);
}

std::optional<TriangleWitness> find_triangle(const Graph& g);
inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

bool is_planar(const Graph& g);

// Re-checks a failure witness from scratch against the graph and (for
// part-local witnesses) the part it was reported for.
bool witness_holds(const Graph& g, const Witness& w, std::span<const Vertex> part = {});

}  // namespace equipart
