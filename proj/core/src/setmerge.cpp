#include "equipart/setmerge.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "equipart/errors.hpp"

namespace equipart {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct LabeledClass {
  int index;
  VertexSet members;
};

std::int64_t total_size(const std::vector<LabeledClass>& classes) {
  std::int64_t n = 0;
  for (const auto& c : classes) n += static_cast<std::int64_t>(c.members.size());
  return n;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool valid_at_level(const std::vector<LabeledClass>& classes, int ell, const MergeResult& r) {
  const int k = static_cast<int>(classes.size());
  const std::int64_t n = total_size(classes);
  if (static_cast<int>(r.parts.size()) != ell) return false;
  const std::int64_t q = merge_quota(k, ell, n);
  if (r.quota != q || r.threshold != merge_threshold(k, ell, n, q)) return false;

  auto members_of = [&](int index) -> const VertexSet* {
    for (const auto& c : classes) {
      if (c.index == index) return &c.members;
    }
    return nullptr;
  };
  auto union_of = [&](const std::vector<int>& indices, VertexSet& out) {
    auto sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    out.clear();
    for (int i : sorted) {
      const VertexSet* m = members_of(i);
      if (m == nullptr) return false;
      out = unite(out, *m);
    }
    return true;
  };

  // (B0, B1..Bl) partitions the union of the classes.
  VertexSet everything;
  for (const auto& c : classes) everything = unite(everything, c.members);
  std::vector<Vertex> covered(r.leftover.begin(), r.leftover.end());
  for (const auto& p : r.parts) covered.insert(covered.end(), p.members.begin(), p.members.end());
  std::sort(covered.begin(), covered.end());
  if (covered != everything) return false;

  // (i) each merged set lies inside at most two classes.
  VertexSet scratch;
  for (const auto& p : r.parts) {
    if (p.from.empty() || p.from.size() > 2) return false;
    if (!union_of(p.from, scratch) || !is_subset(p.members, scratch)) return false;
  }
  // (ii), (iii) size bounds, positionally.
  for (int i = 1; i <= ell; ++i) {
    const auto size = static_cast<std::int64_t>(r.parts[i - 1].members.size());
    if (size < (i <= r.threshold ? q + 1 : q)) return false;
  }
  // (iv) leftovers inside k - l - 1 classes.
  if (static_cast<int>(r.leftover_classes.size()) != k - ell - 1) return false;
  if (!union_of(r.leftover_classes, scratch) || !is_subset(r.leftover, scratch)) return false;
  return true;
}

MergeResult merge_recursive(std::vector<LabeledClass> classes, int ell) {
  const int k = static_cast<int>(classes.size());
  const std::int64_t n = total_size(classes);
  const std::int64_t q = merge_quota(k, ell, n);
  auto size_of = [&](int i) { return static_cast<std::int64_t>(classes[i].members.size()); };

  MergeResult result;
  if (ell == 1) {
    // The largest pair has at least ceil(2n/k) = q elements.
    int bi = 0;
    int bj = 1;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (size_of(i) + size_of(j) > size_of(bi) + size_of(bj)) {
          bi = i;
          bj = j;
        }
      }
    }
    result.parts.push_back({unite(classes[bi].members, classes[bj].members),
                            {classes[bi].index, classes[bj].index}});
    for (int i = 0; i < k; ++i) {
      if (i == bi || i == bj) continue;
      result.leftover = unite(result.leftover, classes[i].members);
      result.leftover_classes.push_back(classes[i].index);
    }
  } else {
    int pi = -1;
    int pj = -1;
    for (int i = 0; i < k && pi < 0; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && size_of(i) <= q && q <= size_of(i) + size_of(j)) {
          pi = i;
          pj = j;
          break;
        }
      }
    }

    if (pi >= 0) {
      // B_l = A_i plus the lowest ids of A_j, exactly q elements; recurse
      // on the k - 1 remaining classes with l - 1.
      const auto take = static_cast<std::size_t>(q - size_of(pi));
      const auto& donor = classes[pj].members;
      VertexSet taken(donor.begin(), donor.begin() + static_cast<std::ptrdiff_t>(take));
      MergedPart last{unite(classes[pi].members, taken),
                      {std::min(classes[pi].index, classes[pj].index),
                       std::max(classes[pi].index, classes[pj].index)}};

      std::vector<LabeledClass> rest;
      rest.reserve(classes.size() - 1);
      for (int i = 0; i < k; ++i) {
        if (i == pi) continue;
        if (i == pj) {
          rest.push_back({classes[i].index,
                          VertexSet(donor.begin() + static_cast<std::ptrdiff_t>(take), donor.end())});
        } else {
          rest.push_back(classes[i]);
        }
      }
      result = merge_recursive(std::move(rest), ell - 1);
      result.parts.push_back(std::move(last));
    } else {
      // No class fits under q with a partner reaching q, so every class
      // has more than q elements.
      for (int i = 0; i < k; ++i) {
        if (size_of(i) <= q) {
          throw UnreachableCaseII("class " + std::to_string(classes[i].index) +
                                  " has at most q elements but no pair straddles q");
        }
      }
      for (int i = 0; i + 1 < ell; ++i) {
        result.parts.push_back({classes[i].members, {classes[i].index}});
      }
      result.parts.push_back({unite(classes[ell - 1].members, classes[ell].members),
                              {classes[ell - 1].index, classes[ell].index}});
      for (int i = ell + 1; i < k; ++i) {
        result.leftover = unite(result.leftover, classes[i].members);
        result.leftover_classes.push_back(classes[i].index);
      }
    }
  }

  std::stable_sort(result.parts.begin(), result.parts.end(),
                   [](const MergedPart& a, const MergedPart& b) {
                     return a.members.size() > b.members.size();
                   });
  std::sort(result.leftover_classes.begin(), result.leftover_classes.end());
  result.quota = q;
  result.threshold = merge_threshold(k, ell, n, q);
  if (!valid_at_level(classes, ell, result)) {
    throw InvariantViolation("merge of " + std::to_string(k) + " classes into " +
                             std::to_string(ell) + " sets broke its guarantees");
  }
  return result;
}

std::vector<LabeledClass> label_and_check(std::span<const VertexSet> classes) {
  std::vector<LabeledClass> labeled;
  labeled.reserve(classes.size());
  std::vector<Vertex> all;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    VertexSet members = classes[i];
    std::sort(members.begin(), members.end());
    all.insert(all.end(), members.begin(), members.end());
    labeled.push_back({static_cast<int>(i), std::move(members)});
  }
  std::sort(all.begin(), all.end());
  const auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) {
    throw OverlappingSets("element " + std::to_string(*dup) + " appears in two classes");
  }
  return labeled;
}

void check_parameters(int k, int ell) {
  if (k < 2) throw BadParameters("need at least two classes, got " + std::to_string(k));
  if (ell < 1 || ell >= k) {
    throw BadParameters("need 1 <= l < k, got l=" + std::to_string(ell) +
                        " k=" + std::to_string(k));
  }
}

std::vector<VertexSet> padded_classes(const Coloring& c, std::size_t count) {
  if (c.classes.size() > count) {
    throw InvalidColoring("expected at most " + std::to_string(count) + " colour classes, got " +
                          std::to_string(c.classes.size()));
  }
  auto classes = c.classes;
  classes.resize(count);
  return classes;
}

void require_valid(const Graph& g, const Coloring& c) {
  const auto report = validate_coloring(g, c);
  for (const auto& check : report.checks) {
    if (!check.pass) throw InvalidColoring("colouring fails check '" + check.name + "'");
  }
}

}  // namespace

std::int64_t merge_quota(int k, int ell, std::int64_t n) {
  if (ell < 1 || ell >= k) {
    throw BadParameters("need 1 <= l < k, got l=" + std::to_string(ell) +
                        " k=" + std::to_string(k));
  }
  if (n < 0) throw BadParameters("negative universe size");
  return floor_div(2 * n + k - ell, k + ell - 1);
}

std::int64_t merge_threshold(int k, int ell, std::int64_t n, std::int64_t q) {
  // ceil(x / 2) for x = 2n - (k + l - 1) q.
  return floor_div(2 * n - static_cast<std::int64_t>(k + ell - 1) * q + 1, 2);
}

QuotaStep lemma_quota_step(int k, int ell, std::int64_t n) {
  if (ell < 2 || ell >= k) {
    throw BadParameters("the quota step needs 2 <= l < k, got l=" + std::to_string(ell) +
                        " k=" + std::to_string(k));
  }
  QuotaStep s;
  s.q = merge_quota(k, ell, n);
  s.n_next = n - s.q;
  s.q_next = floor_div(2 * s.n_next + k - ell, k + ell - 3);
  s.threshold = merge_threshold(k, ell, n, s.q);
  s.quota_rule_holds = s.q_next == (s.threshold >= ell - 1 ? s.q + 1 : s.q);
  // Both sides doubled to stay in integers.
  s.slack_preserved = 2 * n - static_cast<std::int64_t>(k + ell - 1) * s.q ==
                      2 * s.n_next - static_cast<std::int64_t>(k + ell - 3) * s.q;
  s.identity_holds = s.quota_rule_holds && s.slack_preserved;
  return s;
}

MergeResult proposition_merge(std::span<const VertexSet> classes, int ell) {
  check_parameters(static_cast<int>(classes.size()), ell);
  return merge_recursive(label_and_check(classes), ell);
}

bool merge_result_valid(std::span<const VertexSet> classes, int ell, const MergeResult& r) {
  const int k = static_cast<int>(classes.size());
  if (k < 2 || ell < 1 || ell >= k) return false;
  return valid_at_level(label_and_check(classes), ell, r);
}

std::vector<MergedPart> equitable_merge(std::span<const VertexSet> classes) {
  const int k = static_cast<int>(classes.size());
  check_parameters(k, k - 1);
  auto result = proposition_merge(classes, k - 1);
  if (!result.leftover.empty()) {
    throw InvariantViolation("equitable merge left elements outside the merged sets");
  }
  std::size_t n = 0;
  for (const auto& c : classes) n += c.size();
  const std::size_t parts = static_cast<std::size_t>(k - 1);
  std::size_t large = 0;
  for (const auto& p : result.parts) {
    const std::size_t s = p.members.size();
    if (s != n / parts && s != (n + parts - 1) / parts) {
      throw InvariantViolation("equitable merge produced a set of size " + std::to_string(s));
    }
    if (n % parts != 0 && s == n / parts + 1) ++large;
  }
  if (large != n % parts) {
    throw InvariantViolation("equitable merge has the wrong number of large sets");
  }
  return std::move(result.parts);
}

TwoForestsSplit partition_2forests_1graph(const Graph& g, const Coloring& acyclic5) {
  constexpr std::size_t kColors = 5;
  Coloring coloring{ColoringKind::acyclic, padded_classes(acyclic5, kColors)};
  require_valid(g, coloring);

  TwoForestsSplit split;
  split.merge = proposition_merge(coloring.classes, 2);

  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t target = n % 3 == 2 ? n / 3 + 1 : n / 3;
  std::vector<char> used(n, 0);
  VertexSet trimmed[2];
  for (int i = 0; i < 2; ++i) {
    const auto& members = split.merge.parts[i].members;
    if (members.size() < target) {
      throw InvariantViolation("merged forest smaller than the trim target");
    }
    trimmed[i].assign(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(target));
    for (Vertex v : trimmed[i]) used[v] = 1;
  }
  VertexSet rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!used[v]) rest.push_back(v);
  }
  split.partition.parts = {std::move(rest), std::move(trimmed[0]), std::move(trimmed[1])};
  return split;
}

Partition equitable_partition_from_coloring(const Graph& g, const Coloring& coloring) {
  require_valid(g, coloring);
  Partition p;
  for (auto& part : equitable_merge(coloring.classes)) p.parts.push_back(std::move(part.members));
  return p;
}

TwoPlusIndependentSplit partition_two_plus_independent(const Graph& g, const Coloring& coloring4) {
  constexpr std::size_t kColors = 4;
  Coloring coloring{coloring4.kind, padded_classes(coloring4, kColors)};
  require_valid(g, coloring);
  TwoPlusIndependentSplit split;
  split.merge = proposition_merge(coloring.classes, 2);
  split.partition.parts = {split.merge.parts[0].members, split.merge.parts[1].members,
                           split.merge.leftover};
  return split;
}

}  // namespace equipart
