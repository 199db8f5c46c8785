#include "equipart/oracle.hpp"

#include <numeric>
#include <string>

#include "equipart/errors.hpp"

namespace equipart {
namespace {

class PartitionEnumerator {
 public:
  PartitionEnumerator(const Graph& g, const PartitionSpec& spec)
      : g_(g), spec_(spec), parts_(spec.part_count()) {
    const auto n = static_cast<std::size_t>(g.order());
    const std::size_t p = spec.part_count();
    if (spec.equitable) {
      cap_ = (n + p - 1) / p;
      full_allowed_ = n % p == 0 ? p : n % p;
    } else {
      cap_ = n;
      full_allowed_ = p;
    }
  }

  std::optional<Partition> run() {
    if (!assign(0)) return std::nullopt;
    return Partition{parts_, {}};
  }

 private:
  bool assign(Vertex v) {
    if (v == g_.order()) return check_partition(g_, parts_, spec_).pass();
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      auto& part = parts_[p];
      if (part.size() == cap_) continue;
      if (part.size() + 1 == cap_ && full_parts_ == full_allowed_) continue;
      part.push_back(v);
      const bool became_full = part.size() == cap_;
      full_parts_ += became_full ? 1 : 0;
      // Every supported constraint is hereditary, so a violated partial part
      // cannot recover.
      const bool ok = std::holds_alternative<std::monostate>(
          check_part(g_, part, spec_.constraints[p]));
      if (ok && assign(v + 1)) return true;
      full_parts_ -= became_full ? 1 : 0;
      part.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const PartitionSpec& spec_;
  std::vector<VertexSet> parts_;
  std::size_t cap_ = 0;
  std::size_t full_allowed_ = 0;
  std::size_t full_parts_ = 0;
};

class MergeBoundSearch {
 public:
  MergeBoundSearch(std::span<const int> sizes, int ell, int target)
      : remaining_(sizes.begin(), sizes.end()), ell_(ell), target_(target) {}

  bool run() { return place(0, 0, 0); }

 private:
  // Sets are built in non-decreasing (a, b) order to skip permutations.
  bool place(int built, int min_a, int min_b) {
    if (built == ell_) return true;
    const int k = static_cast<int>(remaining_.size());
    for (int a = min_a; a < k; ++a) {
      for (int b = (a == min_a ? min_b : a); b < k; ++b) {
        if (b < a) continue;
        if (a == b) {
          if (remaining_[a] < target_) continue;
          remaining_[a] -= target_;
          const bool ok = place(built + 1, a, b);
          remaining_[a] += target_;
          if (ok) return true;
          continue;
        }
        const int lo = std::max(0, target_ - remaining_[b]);
        const int hi = std::min(remaining_[a], target_);
        for (int x = lo; x <= hi; ++x) {
          remaining_[a] -= x;
          remaining_[b] -= target_ - x;
          const bool ok = place(built + 1, a, b);
          remaining_[a] += x;
          remaining_[b] += target_ - x;
          if (ok) return true;
        }
      }
    }
    return false;
  }

  std::vector<int> remaining_;
  int ell_;
  int target_;
};

}  // namespace

std::optional<Partition> brute_partition_exists(const Graph& g, const PartitionSpec& spec) {
  if (g.order() > kOraclePartitionMaxOrder) {
    throw InstanceTooLarge("brute-force partition search is capped at " +
                           std::to_string(kOraclePartitionMaxOrder) + " vertices");
  }
  if (spec.part_count() == 0) throw BadSpec("a partition spec needs at least one part");
  return PartitionEnumerator(g, spec).run();
}

bool merge_bound_tight(std::span<const int> class_sizes, int ell, int target) {
  long total = 0;
  for (int s : class_sizes) {
    if (s < 0) throw BadParameters("negative class size");
    total += s;
  }
  if (total > kOracleMergeMaxTotal) {
    throw InstanceTooLarge("merge-bound search is capped at a total size of " +
                           std::to_string(kOracleMergeMaxTotal));
  }
  if (ell <= 0 || target <= 0) return true;
  return MergeBoundSearch(class_sizes, ell, target).run();
}

}  // namespace equipart
