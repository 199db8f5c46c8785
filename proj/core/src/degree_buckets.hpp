#pragma once

#include <set>
#include <vector>

#include "equipart/graph.hpp"

namespace equipart::detail {

// Vertices bucketed by their current degree; each bucket iterates in id
// order so the lowest id of a given degree is always `*bucket(d).begin()`.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(int n) : degree_(static_cast<std::size_t>(n), -1) {}

  void insert(Vertex v, int degree) {
    degree_[v] = degree;
    bucket_for(degree).insert(v);
  }

  void erase(Vertex v) {
    buckets_[degree_[v]].erase(v);
    degree_[v] = -1;
  }

  void change(Vertex v, int delta) {
    const int d = degree_[v];
    buckets_[d].erase(v);
    degree_[v] = d + delta;
    bucket_for(d + delta).insert(v);
  }

  bool present(Vertex v) const { return degree_[v] >= 0; }
  int degree(Vertex v) const { return degree_[v]; }

  const std::set<Vertex>& bucket(int degree) const {
    static const std::set<Vertex> empty;
    return degree < static_cast<int>(buckets_.size()) ? buckets_[degree] : empty;
  }

  // Smallest degree >= `from` with a non-empty bucket, or -1.
  int lowest_nonempty(int from = 0) const {
    for (int d = from; d < static_cast<int>(buckets_.size()); ++d) {
      if (!buckets_[d].empty()) return d;
    }
    return -1;
  }

 private:
  std::set<Vertex>& bucket_for(int degree) {
    if (degree >= static_cast<int>(buckets_.size())) buckets_.resize(degree + 1);
    return buckets_[degree];
  }

  std::vector<int> degree_;
  std::vector<std::set<Vertex>> buckets_;
};

}  // namespace equipart::detail
