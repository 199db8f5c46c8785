#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "equipart/coloring.hpp"
#include "equipart/graph.hpp"
#include "equipart/partition.hpp"

namespace equipart {

// Quota q = floor((2n + k - l) / (k + l - 1)) for merging k disjoint classes
// into l sets. Throws BadParameters unless 1 <= l < k.
std::int64_t merge_quota(int k, int ell, std::int64_t n);

// ceil(n - (k + l - 1) q / 2): the number of merged sets guaranteed to reach
// q + 1. May be zero or negative.
std::int64_t merge_threshold(int k, int ell, std::int64_t n, std::int64_t q);

// One induction step of the quota recursion: dropping a set of exactly q
// elements and one class moves (k, l, n) to (k - 1, l - 1, n - q).
struct QuotaStep {
  std::int64_t q = 0;
  std::int64_t n_next = 0;
  std::int64_t q_next = 0;
  std::int64_t threshold = 0;
  bool quota_rule_holds = false;  // q_next == q + 1 exactly when threshold >= l - 1
  bool slack_preserved = false;   // n - (k+l-1)q/2 == n_next - (k+l-3)q/2
  bool identity_holds = false;    // both of the above
};

// Throws BadParameters unless 2 <= l < k.
QuotaStep lemma_quota_step(int k, int ell, std::int64_t n);

struct MergedPart {
  VertexSet members;
  std::vector<int> from;  // indices of the (at most two) classes it draws from

  friend bool operator==(const MergedPart&, const MergedPart&) = default;
};

struct MergeResult {
  VertexSet leftover;                // B0
  std::vector<MergedPart> parts;     // B1..Bl, non-increasing size
  std::vector<int> leftover_classes; // I: |I| = k - l - 1, B0 inside their union
  std::int64_t quota = 0;            // q
  std::int64_t threshold = 0;        // r

  friend bool operator==(const MergeResult&, const MergeResult&) = default;
};

// Merges k pairwise disjoint classes into l sets, each inside the union of at
// most two classes, with |B_i| >= q + 1 for i <= r and |B_i| >= q otherwise;
// everything left over lies in k - l - 1 untouched classes. Throws
// BadParameters, OverlappingSets, or UnreachableCaseII (a bug).
MergeResult proposition_merge(std::span<const VertexSet> classes, int ell);

// Checks the four MergeResult guarantees against the input classes.
bool merge_result_valid(std::span<const VertexSet> classes, int ell, const MergeResult& r);

// k classes into k - 1 sets whose sizes are floor(n/(k-1)) or ceil(n/(k-1)),
// exactly n mod (k-1) of them large. Sets are ordered by non-increasing size.
std::vector<MergedPart> equitable_merge(std::span<const VertexSet> classes);

struct TwoForestsSplit {
  Partition partition;  // (B0', B1', B2'): any, forest, forest
  MergeResult merge;    // before trimming
};

// Equitable 3-partition into one unconstrained part and two forests, from an
// acyclic colouring with at most five classes. Throws InvalidColoring.
TwoForestsSplit partition_2forests_1graph(const Graph& g, const Coloring& acyclic5);

// Equitable (k-1)-partition from a k-colouring: every part lies inside two
// colour classes, so it inherits whatever a pair of classes induces.
Partition equitable_partition_from_coloring(const Graph& g, const Coloring& coloring);

// Partition (A1, A2, A3) from a 4-colouring with A1, A2 each inside two
// classes, |A1|, |A2| >= floor(2(n+1)/5), and A3 inside one class
// (independent).
struct TwoPlusIndependentSplit {
  Partition partition;
  MergeResult merge;
};
TwoPlusIndependentSplit partition_two_plus_independent(const Graph& g, const Coloring& coloring4);

}  // namespace equipart
