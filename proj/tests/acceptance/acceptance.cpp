// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Each criterion also folds every JSON document it
// produces into a digest; the determinism criterion reruns the others and
// compares digests.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "equipart/equipart.hpp"

namespace {

using namespace equipart;
using Clock = std::chrono::steady_clock;

constexpr double kPerGraphLimitSeconds = 5.0;
constexpr double kMergeSweepLimitSeconds = 60.0;
constexpr int kEnumeratedMaxOrder = 7;
constexpr int kPlanarCorpusSize = 1200;
constexpr int kTriangleFreeCorpusSize = 600;
constexpr int kGeneratedMaxOrder = 40;
constexpr int kColoringCorpusMaxOrder = 11;
constexpr int kRandomClassSystems = 200;

class Digest {
 public:
  void add(const std::string& text) {
    for (unsigned char c : text) {
      state_ ^= c;
      state_ *= 1099511628211ull;
    }
    state_ ^= 0xff;
    state_ *= 1099511628211ull;
  }
  void add(const Json& j) { add(j.dump()); }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 1469598103934665603ull;
};

// Collects failures for one criterion; only the first few are kept verbatim.
struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;
  std::string note;
  Digest digest;

  void fail(const std::string& what) {
    ++failures;
    if (samples.size() < 3) samples.push_back(what);
  }
  bool pass() const { return failures == 0 && cases > 0; }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Graph& g) { return "n=" + std::to_string(g.order()) + " g6=" + to_graph6(g); }

// Runs one partitioner on g, times it and verifies the result.
template <class Partitioner>
void check_partitioner(Outcome& out, const Graph& g, Partitioner&& partitioner, const PartitionSpec& spec,
                   double& slowest) {
  ++out.cases;
  try {
    const auto start = Clock::now();
    const auto p = partitioner(g);
    const double took = seconds_since(start);
    slowest = std::max(slowest, took);
    if (took > kPerGraphLimitSeconds) out.fail(describe(g) + " took " + std::to_string(took) + " s");
    const auto report = check_partition(g, p, spec);
    if (!report.pass()) out.fail(describe(g) + " " + to_json(report).dump());
    out.digest.add(to_json(p));
  } catch (const std::exception& e) {
    out.fail(describe(g) + " threw: " + e.what());
  }
}

struct PartitionerOutcomes {
  Outcome two_by_three;
  Outcome three_by_two;
  Outcome triangle_free;
};

// Criteria 1-3 share their corpora: all labelled planar graphs up to seven
// vertices and a generated corpus of larger ones.
PartitionerOutcomes run_partitioner_suites() {
  PartitionerOutcomes t;
  const auto spec23 = PartitionSpec::uniform(2, PartConstraint::degenerate(3), true);
  const auto spec32 = PartitionSpec::uniform(3, PartConstraint::degenerate(2), true);
  const auto spec22 = PartitionSpec::uniform(2, PartConstraint::degenerate(2), true);
  const auto p23 = [](const Graph& g) { return partition_2x3deg(g); };
  const auto p32 = [](const Graph& g) { return partition_3x2deg(g); };
  const auto p22 = [](const Graph& g) { return partition_2x2deg_trifree(g); };
  double slow23 = 0, slow32 = 0, slow22 = 0;
  std::size_t enumerated = 0, enumerated_tf = 0;

  for (int n = 1; n <= kEnumeratedMaxOrder; ++n) {
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_planar(g)) return;
      ++enumerated;
      check_partitioner(t.two_by_three, g, p23, spec23, slow23);
      check_partitioner(t.three_by_two, g, p32, spec32, slow32);
      if (is_triangle_free(g)) {
        ++enumerated_tf;
        check_partitioner(t.triangle_free, g, p22, spec22, slow22);
      }
    });
  }

  std::size_t generated = 0;
  for (const auto& spec : testing::planar_corpus(kPlanarCorpusSize, kGeneratedMaxOrder)) {
    const auto g = gen_planar(spec);
    if (!is_planar(g)) {
      t.two_by_three.fail("generator produced a non-planar graph: " + describe(g));
      continue;
    }
    ++generated;
    check_partitioner(t.two_by_three, g, p23, spec23, slow23);
    check_partitioner(t.three_by_two, g, p32, spec32, slow32);
  }

  std::size_t generated_tf = 0;
  auto triangle_free_graphs = testing::min_degree_three_triangle_free();
  for (const auto& spec : testing::triangle_free_corpus(kTriangleFreeCorpusSize, kGeneratedMaxOrder)) {
    triangle_free_graphs.push_back(gen_planar(spec));
  }
  for (const auto& g : triangle_free_graphs) {
    if (!is_planar(g) || !is_triangle_free(g)) {
      t.triangle_free.fail("corpus graph is not triangle-free planar: " + describe(g));
      continue;
    }
    ++generated_tf;
    check_partitioner(t.triangle_free, g, p22, spec22, slow22);
  }

  const auto note = [](std::size_t a, std::size_t b, double slow) {
    std::ostringstream s;
    s << a << " enumerated + " << b << " generated graphs, slowest " << slow * 1000 << " ms";
    return s.str();
  };
  t.two_by_three.note = note(enumerated, generated, slow23);
  t.three_by_two.note = note(enumerated, generated, slow32);
  t.triangle_free.note = note(enumerated_tf, generated_tf, slow22);
  if (generated < 1000) t.two_by_three.fail("generated corpus smaller than 1000");
  if (generated < 1000) t.three_by_two.fail("generated corpus smaller than 1000");
  if (generated_tf < 500) t.triangle_free.fail("generated triangle-free corpus smaller than 500");
  return t;
}

// Classes of the given sizes over consecutive element ids.
std::vector<VertexSet> classes_of_sizes(const std::vector<int>& sizes) {
  std::vector<VertexSet> classes;
  Vertex next = 0;
  for (int s : sizes) {
    VertexSet c;
    for (int i = 0; i < s; ++i) c.push_back(next++);
    classes.push_back(std::move(c));
  }
  return classes;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Independent restatement of the merge guarantees; returns an empty string
// on success.
std::string merge_violation(const std::vector<VertexSet>& classes, int ell, const MergeResult& r) {
  const int k = static_cast<int>(classes.size());
  std::int64_t n = 0;
  for (const auto& c : classes) n += static_cast<std::int64_t>(c.size());
  const std::int64_t q = floor_div(2 * n + k - ell, k + ell - 1);
  // ceil(n - (k+l-1) q / 2) = ceil((2n - (k+l-1) q) / 2)
  const std::int64_t twice = 2 * n - (k + ell - 1) * q;
  const std::int64_t threshold = -floor_div(-twice, 2);
  if (r.quota != q) return "quota " + std::to_string(r.quota) + " != " + std::to_string(q);
  if (r.threshold != threshold) return "threshold " + std::to_string(r.threshold) + " != " + std::to_string(threshold);
  if (static_cast<int>(r.parts.size()) != ell) return "wrong number of merged sets";

  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i) {
    for (Vertex v : classes[i]) owner[v] = i;
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : r.leftover) ++seen.at(v);
  for (int i = 0; i < ell; ++i) {
    const auto& part = r.parts[i];
    if (part.from.size() > 2) return "set draws from more than two classes";
    for (Vertex v : part.members) {
      ++seen.at(v);
      if (std::find(part.from.begin(), part.from.end(), owner[v]) == part.from.end()) {
        return "element outside its set's classes";
      }
    }
    const auto need = static_cast<std::size_t>(i + 1 <= threshold ? q + 1 : q);
    if (part.members.size() < need) return "set " + std::to_string(i + 1) + " below its bound";
  }
  for (int count : seen) {
    if (count != 1) return "sets do not partition the elements";
  }
  if (static_cast<int>(r.leftover_classes.size()) != k - ell - 1) return "|I| != k - l - 1";
  for (Vertex v : r.leftover) {
    if (std::find(r.leftover_classes.begin(), r.leftover_classes.end(), owner[v]) ==
        r.leftover_classes.end()) {
      return "leftover element outside the untouched classes";
    }
  }
  return {};
}

void compositions(int n, int k, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& f) {
  if (k == 0) {
    if (n == 0) f(prefix);
    return;
  }
  for (int first = 1; first <= n - (k - 1); ++first) {
    prefix.push_back(first);
    compositions(n - first, k - 1, prefix, f);
    prefix.pop_back();
  }
}

Outcome run_merge_sweep() {
  Outcome out;
  const auto start = Clock::now();
  for (int n = 1; n <= 12; ++n) {
    for (int k = 2; k <= 6; ++k) {
      std::vector<int> prefix;
      compositions(n, k, prefix, [&](const std::vector<int>& sizes) {
        const auto classes = classes_of_sizes(sizes);
        for (int ell = 1; ell < k; ++ell) {
          ++out.cases;
          std::string where;
          for (int s : sizes) where += std::to_string(s) + ",";
          where = "sizes " + where + " l=" + std::to_string(ell);
          try {
            const auto r = proposition_merge(classes, ell);
            const auto violation = merge_violation(classes, ell, r);
            if (!violation.empty()) out.fail(where + ": " + violation);
            if (!merge_result_valid(classes, ell, r)) out.fail(where + ": library validator disagrees");
            out.digest.add(to_json(r));
          } catch (const std::exception& e) {
            out.fail(where + " threw: " + e.what());
          }
        }
      });
    }
  }
  const double took = seconds_since(start);
  if (took > kMergeSweepLimitSeconds) out.fail("sweep took " + std::to_string(took) + " s");
  out.note = std::to_string(out.cases) + " (sizes, l) cases in " + std::to_string(took) + " s";
  return out;
}

Outcome run_quota_recursion() {
  Outcome out;
  for (int k = 3; k <= 8; ++k) {
    for (int ell = 2; ell < k; ++ell) {
      for (std::int64_t n = 1; n <= 60; ++n) {
        ++out.cases;
        const std::string where = "(" + std::to_string(k) + "," + std::to_string(ell) + "," + std::to_string(n) + ")";
        try {
          const auto step = lemma_quota_step(k, ell, n);
          if (!step.identity_holds) out.fail(where + " identity does not hold");
          // Recompute both relations here in exact integer arithmetic.
          const std::int64_t q = floor_div(2 * n + k - ell, k + ell - 1);
          const std::int64_t n_next = n - q;
          const std::int64_t q_next = floor_div(2 * n_next + k - ell, k + ell - 3);
          const std::int64_t threshold = -floor_div(-(2 * n - (k + ell - 1) * q), 2);
          const bool rule = (q_next == q + 1) == (threshold >= ell - 1) && (q_next == q || q_next == q + 1);
          const bool slack = 2 * n - (k + ell - 1) * q == 2 * n_next - (k + ell - 3) * q;
          if (!rule || !slack) out.fail(where + " relation fails in direct evaluation");
          if (step.q != q || step.n_next != n_next || step.q_next != q_next) {
            out.fail(where + " library values differ from direct evaluation");
          }
          out.digest.add(std::to_string(step.q) + "," + std::to_string(step.q_next));
        } catch (const std::exception& e) {
          out.fail(where + " threw: " + e.what());
        }
      }
    }
  }
  out.note = std::to_string(out.cases) + " (k, l, n) triples";
  return out;
}

Outcome run_tightness() {
  Outcome out;
  for (int ell = 1; ell <= 3; ++ell) {
    for (int k = ell + 1; k <= 6; ++k) {
      for (int a = 1; a <= 3; ++a) {
        ++out.cases;
        std::vector<int> sizes(static_cast<std::size_t>(k), a);
        sizes[0] = ell * a;
        int n = 0;
        for (int s : sizes) n += s;
        const std::string where = "l=" + std::to_string(ell) + " k=" + std::to_string(k) + " a=" + std::to_string(a);
        try {
          const auto q = merge_quota(k, ell, n);
          const bool reachable = merge_bound_tight(sizes, ell, 2 * a);
          const bool beyond = merge_bound_tight(sizes, ell, 2 * a + 1);
          if (q != 2 * a) out.fail(where + ": q=" + std::to_string(q));
          if (!reachable) out.fail(where + ": target 2a not reachable");
          if (beyond) out.fail(where + ": target 2a+1 reachable");
          out.digest.add(Json{q, reachable, beyond});
        } catch (const std::exception& e) {
          out.fail(where + " threw: " + e.what());
        }
      }
    }
  }
  out.note = std::to_string(out.cases) + " size vectors";
  return out;
}

Outcome run_equitable_merge() {
  Outcome out;
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < kRandomClassSystems; ++trial) {
    ++out.cases;
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<VertexSet> classes(static_cast<std::size_t>(k));
    for (Vertex v : ids) classes[std::uniform_int_distribution<int>(0, k - 1)(rng)].push_back(v);
    for (auto& c : classes) std::sort(c.begin(), c.end());
    const std::string where = "trial " + std::to_string(trial) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
    try {
      const auto parts = equitable_merge(classes);
      const int small = n / (k - 1);
      const int large_count = n % (k - 1);
      int larges = 0;
      std::set<Vertex> covered;
      for (const auto& p : parts) {
        const int size = static_cast<int>(p.members.size());
        if (size == small + 1 && large_count > 0) {
          ++larges;
        } else if (size != small) {
          out.fail(where + ": size " + std::to_string(size));
        }
        covered.insert(p.members.begin(), p.members.end());
      }
      if (static_cast<int>(parts.size()) != k - 1) out.fail(where + ": wrong part count");
      if (larges != large_count) out.fail(where + ": wrong number of large parts");
      if (static_cast<int>(covered.size()) != n) out.fail(where + ": parts do not cover every element");
      if (!proposition_merge(classes, k - 1).leftover.empty()) out.fail(where + ": B0 not empty");
      Json j = Json::array();
      for (const auto& p : parts) j.push_back(p.members);
      out.digest.add(j);
    } catch (const std::exception& e) {
      out.fail(where + " threw: " + e.what());
    }
  }
  out.note = std::to_string(out.cases) + " random class systems";
  return out;
}

Outcome run_two_forests() {
  Outcome out;
  std::vector<Graph> corpus;
  for (int n = 1; n <= testing::kMaxCanonicalOrder; ++n) {
    const auto& classes = testing::planar_classes(n);
    corpus.insert(corpus.end(), classes.begin(), classes.end());
  }
  for (const auto& spec : testing::planar_corpus(kPlanarCorpusSize, kGeneratedMaxOrder)) {
    if (spec.n <= kColoringCorpusMaxOrder) corpus.push_back(gen_planar(spec));
  }
  const PartitionSpec spec{{PartConstraint::any(), PartConstraint::forest(), PartConstraint::forest()}, true};
  std::uint64_t most_nodes = 0;
  for (const auto& g : corpus) {
    ++out.cases;
    try {
      const auto search = exact_acyclic_coloring(g, 5);
      most_nodes = std::max(most_nodes, search.nodes);
      if (search.status != SearchStatus::found) {
        out.fail(describe(g) + ": no acyclic 5-colouring within budget");
        continue;
      }
      if (!validate_coloring(g, *search.coloring).pass()) out.fail(describe(g) + ": colouring invalid");
      const auto split = partition_2forests_1graph(g, *search.coloring);
      const auto& parts = split.partition.parts;
      if (parts.size() != 3) {
        out.fail(describe(g) + ": not 3 parts");
        continue;
      }
      std::size_t lo = parts[0].size(), hi = parts[0].size();
      for (const auto& p : parts) {
        lo = std::min(lo, p.size());
        hi = std::max(hi, p.size());
      }
      if (hi - lo > 1) out.fail(describe(g) + ": sizes differ by more than one");
      for (int i = 1; i <= 2; ++i) {
        if (find_cycle(g, parts[i])) out.fail(describe(g) + ": part " + std::to_string(i + 1) + " has a cycle");
      }
      const auto bound = static_cast<std::size_t>((g.order() + 1) / 3);
      for (const auto& merged : split.merge.parts) {
        if (merged.members.size() < bound) out.fail(describe(g) + ": merged set below (n+1)/3");
      }
      if (!check_partition(g, split.partition, spec).pass()) out.fail(describe(g) + ": verifier rejects");
      out.digest.add(to_json(*search.coloring));
      out.digest.add(to_json(split.partition));
    } catch (const std::exception& e) {
      out.fail(describe(g) + " threw: " + e.what());
    }
  }
  out.note = std::to_string(out.cases) + " planar graphs, most search nodes " + std::to_string(most_nodes);
  return out;
}

Outcome run_oracle_agreement() {
  Outcome out;
  const auto spec23 = PartitionSpec::uniform(2, PartConstraint::degenerate(3), true);
  const auto spec32 = PartitionSpec::uniform(3, PartConstraint::degenerate(2), true);
  const auto spec22 = PartitionSpec::uniform(2, PartConstraint::degenerate(2), true);
  const auto agree = [&](const Graph& g, const PartitionSpec& spec, const Partition& algorithmic) {
    ++out.cases;
    const auto found = brute_partition_exists(g, spec);
    if (!found) {
      out.fail(describe(g) + ": oracle finds no partition");
      return;
    }
    if (!check_partition(g, *found, spec).pass()) out.fail(describe(g) + ": oracle output fails verifier");
    if (!check_partition(g, algorithmic, spec).pass()) out.fail(describe(g) + ": algorithm output fails verifier");
    out.digest.add(to_json(*found));
  };
  std::size_t planar = 0, triangle_free = 0;
  for (int n = 1; n <= testing::kMaxCanonicalOrder; ++n) {
    for (const auto& g : testing::planar_classes(n)) {
      ++planar;
      try {
        agree(g, spec23, partition_2x3deg(g));
        agree(g, spec32, partition_3x2deg(g));
        if (is_triangle_free(g)) {
          ++triangle_free;
          agree(g, spec22, partition_2x2deg_trifree(g));
        }
      } catch (const std::exception& e) {
        out.fail(describe(g) + " threw: " + e.what());
      }
    }
  }
  out.note = std::to_string(planar) + " planar and " + std::to_string(triangle_free) +
             " triangle-free planar isomorphism classes";
  return out;
}

struct Criterion {
  int number;
  const char* title;
  Outcome outcome;
};

std::vector<Criterion> run_all() {
  auto partitioners = run_partitioner_suites();
  std::vector<Criterion> all;
  all.push_back({1, "two 3-degenerate parts", std::move(partitioners.two_by_three)});
  all.push_back({2, "three 2-degenerate parts", std::move(partitioners.three_by_two)});
  all.push_back({3, "two 2-degenerate parts, triangle-free", std::move(partitioners.triangle_free)});
  all.push_back({4, "merge guarantees, exhaustive", run_merge_sweep()});
  all.push_back({5, "quota recursion identity", run_quota_recursion()});
  all.push_back({6, "quota tightness", run_tightness()});
  all.push_back({7, "equitable merge sizes", run_equitable_merge()});
  all.push_back({8, "two forests and one graph", run_two_forests()});
  all.push_back({9, "oracle agreement", run_oracle_agreement()});
  return all;
}

void print(int number, const char* title, const Outcome& o) {
  std::printf("[%s] %d %s: %s", o.pass() ? "PASS" : "FAIL", number, title, o.note.c_str());
  if (o.failures > 0) std::printf(" (%zu failures)", o.failures);
  std::printf("\n");
  for (const auto& s : o.samples) std::printf("       %s\n", s.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  bool ok = true;
  const auto first = run_all();
  for (const auto& c : first) {
    print(c.number, c.title, c.outcome);
    ok = ok && c.outcome.pass();
  }

  const auto second = run_all();
  Outcome determinism;
  for (std::size_t i = 0; i < first.size(); ++i) {
    ++determinism.cases;
    if (first[i].outcome.digest.value() != second[i].outcome.digest.value()) {
      determinism.fail("criterion " + std::to_string(first[i].number) + " output changed between runs");
    }
  }
  determinism.note = "reran criteria 1-9, compared output digests";
  print(10, "determinism", determinism);
  ok = ok && determinism.pass();
  return ok ? 0 : 1;
}
