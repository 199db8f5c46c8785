#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "equipart/equipart.hpp"

namespace equipart::cli {
namespace {

namespace fs = std::filesystem;

// Thrown for IO problems and bad flag combinations; maps to exit code 1.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition failure that carries a JSON payload (e.g. a witness).
struct PreconditionFailure : std::runtime_error {
  PreconditionFailure(const std::string& what, Json detail)
      : std::runtime_error(what), detail(std::move(detail)) {}
  Json detail;
};

const std::vector<std::string> kAlgorithms = {
    "2x3deg",      "3x2deg",         "2x2deg-trifree",        "2forests1graph",
    "3bipartite",  "linear-forests", "2forests1independent", "2bipartite1independent",
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CliError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

GraphFormat resolve_format(const std::string& format, const std::string& path,
                           std::string_view text) {
  if (format == "graph6") return GraphFormat::graph6;
  if (format == "edgelist") return GraphFormat::edge_list;
  if (path.ends_with(".g6")) return GraphFormat::graph6;
  if (path.ends_with(".txt") || path.ends_with(".edges")) return GraphFormat::edge_list;
  return detect_format(text);
}

Graph load_graph(const std::string& path, const std::string& format, std::istream& in) {
  const auto text = read_source(path, in);
  return parse_graph(text, resolve_format(format, path, text));
}

Json load_json(const std::string& path, std::istream& in) {
  try {
    return Json::parse(read_source(path, in));
  } catch (const Json::parse_error& e) {
    throw CliError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EQUIPART_BUDGET")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw CliError("EQUIPART_BUDGET must be a positive integer");
    return value;
  }
  return kDefaultColoringBudget;
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

Coloring obtain_coloring(const Graph& g, const std::optional<Coloring>& supplied, int k,
                         bool acyclic, std::uint64_t budget) {
  if (supplied) return *supplied;
  const auto search = acyclic ? exact_acyclic_coloring(g, k, budget) : exact_proper_coloring(g, k, budget);
  if (search.status != SearchStatus::found) {
    throw PreconditionFailure(
        "no " + std::string(acyclic ? "acyclic " : "") + std::to_string(k) + "-colouring found",
        {{"search", status_name(search.status)}, {"nodes", search.nodes}});
  }
  return *search.coloring;
}

struct PipelineResult {
  Json document;
  Report report;
  std::size_t repairs = 0;
};

void require_planar(const Graph& g) {
  if (!is_planar(g)) throw PreconditionFailure("not planar", Json::object());
}

PipelineResult run_partition(const Graph& g, const std::string& alg,
                             const std::optional<Coloring>& supplied, std::uint64_t budget) {
  PipelineResult result;
  Partition partition;
  PartitionSpec spec;
  Json extra = Json::object();
  const int n = g.order();

  if (alg == "2x3deg") {
    require_planar(g);
    partition = partition_2x3deg(g);
    spec = PartitionSpec::uniform(2, PartConstraint::degenerate(3), true);
  } else if (alg == "3x2deg") {
    require_planar(g);
    partition = partition_3x2deg(g);
    spec = PartitionSpec::uniform(3, PartConstraint::degenerate(2), true);
  } else if (alg == "2x2deg-trifree") {
    if (auto tri = find_triangle(g)) {
      throw PreconditionFailure("not triangle-free", {{"witness", to_json(Witness{*tri})}});
    }
    require_planar(g);
    partition = partition_2x2deg_trifree(g);
    spec = PartitionSpec::uniform(2, PartConstraint::degenerate(2), true);
  } else if (alg == "2forests1graph") {
    const auto coloring = obtain_coloring(g, supplied, 5, true, budget);
    auto split = partition_2forests_1graph(g, coloring);
    partition = std::move(split.partition);
    extra["merge"] = to_json(split.merge);
    extra["coloring"] = to_json(coloring);
    spec = {{PartConstraint::any(), PartConstraint::forest(), PartConstraint::forest()}, true};
  } else if (alg == "3bipartite") {
    const auto coloring = obtain_coloring(g, supplied, 4, false, budget);
    if (coloring.colors() > 4) throw PreconditionFailure("3bipartite needs at most 4 colours", {});
    Coloring padded = coloring;
    padded.classes.resize(4);
    partition = equitable_partition_from_coloring(g, padded);
    extra["coloring"] = to_json(padded);
    spec = PartitionSpec::uniform(3, PartConstraint::bipartite(), true);
  } else if (alg == "linear-forests") {
    if (!supplied) throw CliError("--alg linear-forests needs --coloring");
    const auto check = validate_linear_coloring(g, *supplied);
    if (!check.pass()) {
      throw PreconditionFailure("colouring classes do not pairwise induce linear forests",
                                {{"report", to_json(check)}});
    }
    if (supplied->colors() < 2) throw PreconditionFailure("need at least two colour classes", {});
    partition = equitable_partition_from_coloring(g, *supplied);
    spec = PartitionSpec::uniform(static_cast<int>(supplied->colors()) - 1,
                                  PartConstraint::linear_forest(), true);
  } else if (alg == "2forests1independent" || alg == "2bipartite1independent") {
    const bool forests = alg == "2forests1independent";
    const auto coloring = obtain_coloring(g, supplied, 4, forests, budget);
    if (forests && coloring.kind != ColoringKind::acyclic) {
      Coloring as_acyclic = coloring;
      as_acyclic.kind = ColoringKind::acyclic;
      if (!validate_coloring(g, as_acyclic).pass()) {
        throw PreconditionFailure("colouring is not acyclic", {});
      }
    }
    auto split = partition_two_plus_independent(g, coloring);
    partition = std::move(split.partition);
    extra["merge"] = to_json(split.merge);
    extra["coloring"] = to_json(coloring);
    const auto pair = forests ? PartConstraint::forest() : PartConstraint::bipartite();
    spec = {{pair, pair, PartConstraint::independent()}, false};
  } else {
    throw CliError("unknown algorithm '" + alg + "'");
  }

  result.report = check_partition(g, partition, spec);
  if (alg == "2forests1independent" || alg == "2bipartite1independent") {
    const auto bound = static_cast<std::size_t>((2 * (n + 1)) / 5);
    const bool big = partition.parts[0].size() >= bound && partition.parts[1].size() >= bound;
    result.report.add("size_bound",
                      big ? Witness{}
                          : Witness{CountWitness{bound, std::min(partition.parts[0].size(),
                                                                 partition.parts[1].size())}});
  }
  result.repairs = partition.trace.size();

  Json doc = {{"algorithm", alg}, {"n", n}, {"m", g.size()}};
  const auto body = to_json(partition);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  for (auto& [key, value] : extra.items()) doc[key] = value;
  doc["verification"] = to_json(result.report);
  result.document = std::move(doc);
  return result;
}

void emit(std::ostream& out, const Json& doc, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw CliError("cannot write '" + output_path + "'");
  file << doc.dump(2) << '\n';
}

std::vector<VertexSet> parse_classes(const std::string& spec, std::istream& in) {
  if (spec.starts_with("sizes:")) {
    std::vector<VertexSet> classes;
    Vertex next = 0;
    std::stringstream list(spec.substr(6));
    std::string item;
    while (std::getline(list, item, ',')) {
      int size = -1;
      try {
        std::size_t used = 0;
        size = std::stoi(item, &used);
        if (used != item.size()) size = -1;
      } catch (const std::exception&) {
        size = -1;
      }
      if (size < 0) throw CliError("bad class size '" + item + "'");
      VertexSet cls(static_cast<std::size_t>(size));
      for (auto& v : cls) v = next++;
      classes.push_back(std::move(cls));
    }
    return classes;
  }
  return coloring_from_json(load_json(spec, in)).classes;
}

PartitionSpec parse_spec(const std::string& text, bool equitable) {
  PartitionSpec spec;
  spec.equitable = equitable;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) spec.constraints.push_back(parse_constraint(item));
  if (spec.constraints.empty()) throw BadSpec("empty partition spec");
  return spec;
}

struct BenchTotals {
  std::size_t graphs = 0;
  std::size_t passed = 0;
  std::size_t precondition_violations = 0;
  std::size_t verification_failures = 0;
  std::size_t parse_errors = 0;
  std::size_t repairs = 0;
  std::size_t max_repairs = 0;
  double total_ms = 0;
  double max_ms = 0;
  Json failures = Json::array();
};

std::vector<std::pair<std::string, std::string>> corpus_items(const fs::path& path, std::istream& in) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw CliError("corpus '" + path.string() + "' does not exist");
  }

  // (label, graph text) pairs; graph6 files may hold one graph per line.
  std::vector<std::pair<std::string, std::string>> items;
  for (const auto& file : files) {
    const auto text = read_source(file.string(), in);
    const auto name = file.filename().string();
    const auto format = resolve_format("auto", name, text);
    if (format == GraphFormat::edge_list) {
      items.emplace_back(name, text);
      continue;
    }
    std::stringstream lines(text);
    std::string line;
    std::size_t index = 0;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.starts_with(">>graph6<<")) line.erase(0, 10);
      if (line.empty()) continue;
      items.emplace_back(name + ":" + std::to_string(++index), line);
    }
  }
  return items;
}

int cmd_partition(const Graph& g, const std::string& alg, const std::optional<std::string>& coloring_path,
                  std::optional<std::uint64_t> budget_flag, const std::string& output,
                  std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<Coloring> supplied;
  if (coloring_path) supplied = coloring_from_json(load_json(*coloring_path, in));
  auto result = run_partition(g, alg, supplied, resolve_budget(budget_flag));
  emit(out, result.document, output);
  if (!result.report.pass()) {
    err << "equipart: verification failed for " << alg << "; this is a bug\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Equitable partitions of planar graphs into degenerate parts and forests"};
  app.name(args.empty() ? "equipart" : args.front());
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "auto";
  std::string output;
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Graph file, or - for standard input")->required();
    sub->add_option("--format", format, "graph6, edgelist or auto")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  };

  // partition
  auto* partition = app.add_subcommand("partition", "Compute and verify an equitable partition");
  std::string alg;
  std::optional<std::string> coloring_path;
  std::optional<std::uint64_t> budget;
  add_graph_input(partition);
  partition->add_option("--alg", alg, "Algorithm or preset")->required()->check(CLI::IsMember(kAlgorithms));
  partition->add_option("--coloring", coloring_path, "Colouring JSON to use instead of searching");
  partition->add_option("--budget", budget, "Decision-node budget for colouring searches");
  partition->add_option("-o,--output", output, "Write JSON here instead of standard output");

  // merge
  auto* merge = app.add_subcommand("merge", "Merge colour classes into sets inside pairs of classes");
  int ell = 0;
  bool equitable = false;
  std::string classes_spec;
  merge->add_option("--classes", classes_spec, "sizes:a,b,... or a JSON file of classes")->required();
  auto* ell_opt = merge->add_option("--ell", ell, "Number of merged sets");
  auto* eq_opt = merge->add_flag("--equitable", equitable, "Merge k classes into k-1 equal sets");
  ell_opt->excludes(eq_opt);
  merge->add_option("-o,--output", output, "Write JSON here instead of standard output");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a partition, or report graph properties");
  std::optional<std::string> partition_path;
  std::string spec_text;
  bool spec_equitable = false;
  add_graph_input(verify);
  verify->add_option("--partition", partition_path, "Partition JSON to check");
  verify->add_option("--spec", spec_text, "Per-part constraints, e.g. 3deg,3deg or forest,forest,any");
  verify->add_flag("--equitable", spec_equitable, "Require part sizes to differ by at most one");
  verify->add_option("-o,--output", output, "Write JSON here instead of standard output");

  // color
  auto* color = app.add_subcommand("color", "Search for a proper or acyclic k-colouring");
  int colors = 0;
  bool acyclic = false;
  add_graph_input(color);
  color->add_option("--k", colors, "Number of colours")->required()->check(CLI::PositiveNumber);
  color->add_flag("--acyclic", acyclic, "Forbid two-coloured cycles");
  color->add_option("--budget", budget, "Decision-node budget");
  color->add_option("-o,--output", output, "Write JSON here instead of standard output");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate planar test graphs");
  std::string kind;
  GenSpec gen_spec;
  std::optional<int> edges;
  std::string out_format = "graph6";
  int count = 1;
  std::string out_dir;
  gen->add_option("--kind", kind, "stacked_triangulation, flipped_triangulation, planar_sparse, "
                                  "triangle_free_planar")->required();
  gen->add_option("--n", gen_spec.n, "Vertex count")->required();
  gen->add_option("--flips", gen_spec.flips, "Diagonal flips");
  gen->add_option("--edges", edges, "Edge target for sparse kinds");
  gen->add_option("--seed", gen_spec.seed, "Random seed");
  gen->add_option("--count", count, "Number of graphs (seeds seed, seed+1, ...)")->check(CLI::PositiveNumber);
  gen->add_option("--out-dir", out_dir, "Write one file per graph into this directory");
  gen->add_option("--format", out_format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

  // bench
  auto* bench = app.add_subcommand("bench", "Run a partitioner over a corpus and aggregate results");
  std::string corpus;
  bench->add_option("--corpus", corpus, "Directory (or file) of graphs")->required();
  bench->add_option("--alg", alg, "Algorithm or preset")->required()->check(CLI::IsMember(kAlgorithms));
  bench->add_option("--budget", budget, "Decision-node budget for colouring searches");
  bench->add_option("-o,--output", output, "Write JSON here instead of standard output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*partition) {
      return cmd_partition(load_graph(input, format, in), alg, coloring_path, budget, output, in, out,
                           err);
    }

    if (*merge) {
      const auto classes = parse_classes(classes_spec, in);
      if (equitable) {
        const auto parts = equitable_merge(classes);
        Json list = Json::array();
        for (const auto& p : parts) list.push_back({{"members", p.members}, {"from", p.from}});
        emit(out, {{"parts", std::move(list)}}, output);
        return kOk;
      }
      if (ell_opt->count() == 0) throw CliError("merge needs --ell or --equitable");
      const auto result = proposition_merge(classes, ell);
      emit(out, to_json(result), output);
      return kOk;
    }

    if (*verify) {
      const auto g = load_graph(input, format, in);
      if (!partition_path) {
        Json doc = {{"n", g.order()}, {"m", g.size()}, {"planar", is_planar(g)}};
        const auto tri = find_triangle(g);
        doc["triangle_free"] = !tri.has_value();
        if (tri) doc["triangle"] = to_json(Witness{*tri});
        doc["degeneracy"] = degeneracy_order(g).degeneracy;
        doc["max_degree"] = g.max_degree();
        emit(out, doc, output);
        return kOk;
      }
      if (spec_text.empty()) throw CliError("verify --partition needs --spec");
      const auto p = partition_from_json(load_json(*partition_path, in));
      const auto report = check_partition(g, p, parse_spec(spec_text, spec_equitable));
      emit(out, to_json(report), output);
      return report.pass() ? kOk : kVerificationFailed;
    }

    if (*color) {
      const auto g = load_graph(input, format, in);
      const auto b = resolve_budget(budget);
      const auto search = acyclic ? exact_acyclic_coloring(g, colors, b) : exact_proper_coloring(g, colors, b);
      Json doc = {{"status", status_name(search.status)}, {"nodes", search.nodes}};
      if (search.coloring) {
        const auto body = to_json(*search.coloring);
        for (const auto& [key, value] : body.items()) doc[key] = value;
        doc["verification"] = to_json(validate_coloring(g, *search.coloring));
      }
      emit(out, doc, output);
      return search.status == SearchStatus::found ? kOk : kPreconditionViolated;
    }

    if (*gen) {
      gen_spec.kind = parse_gen_kind(kind);
      gen_spec.edges = edges;
      Json produced = Json::array();
      for (int i = 0; i < count; ++i) {
        GenSpec one = gen_spec;
        one.seed = gen_spec.seed + static_cast<std::uint64_t>(i);
        const auto g = gen_planar(one);
        const std::string text = out_format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g);
        Json entry = {{"kind", to_string(one.kind)}, {"n", g.order()}, {"m", g.size()}, {"seed", one.seed}};
        if (!out_dir.empty()) {
          fs::create_directories(out_dir);
          const auto name = to_string(one.kind) + "_n" + std::to_string(one.n) + "_s" +
                            std::to_string(one.seed) + (out_format == "graph6" ? ".g6" : ".txt");
          const auto path = fs::path(out_dir) / name;
          std::ofstream file(path, std::ios::binary);
          if (!file) throw CliError("cannot write '" + path.string() + "'");
          file << text;
          entry["file"] = path.string();
        } else if (out_format == "graph6") {
          entry["graph6"] = to_graph6(g);
        } else {
          entry["edges"] = Json::array();
          for (const auto& e : g.edges()) entry["edges"].push_back({e.u, e.v});
        }
        produced.push_back(std::move(entry));
      }
      emit(out, count == 1 && out_dir.empty() ? produced.front() : Json{{"graphs", produced}}, "");
      return kOk;
    }

    if (*bench) {
      BenchTotals totals;
      const auto b = resolve_budget(budget);
      for (const auto& [label, text] : corpus_items(corpus, in)) {
        ++totals.graphs;
        Graph g;
        try {
          g = parse_graph(text, detect_format(text));
        } catch (const Error& e) {
          ++totals.parse_errors;
          totals.failures.push_back({{"graph", label}, {"error", e.what()}});
          continue;
        }
        const auto start = std::chrono::steady_clock::now();
        try {
          const auto result = run_partition(g, alg, std::nullopt, b);
          if (result.report.pass()) {
            ++totals.passed;
          } else {
            ++totals.verification_failures;
            totals.failures.push_back({{"graph", label}, {"verification", result.document["verification"]}});
          }
          totals.repairs += result.repairs;
          totals.max_repairs = std::max(totals.max_repairs, result.repairs);
        } catch (const PreconditionFailure& e) {
          ++totals.precondition_violations;
          totals.failures.push_back({{"graph", label}, {"precondition", e.what()}});
        } catch (const PreconditionViolation& e) {
          ++totals.precondition_violations;
          totals.failures.push_back({{"graph", label}, {"precondition", e.what()}});
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        totals.total_ms += ms;
        totals.max_ms = std::max(totals.max_ms, ms);
      }
      const double rate = totals.graphs == 0 ? 0.0 : static_cast<double>(totals.passed) / totals.graphs;
      Json doc = {{"algorithm", alg},
                  {"graphs", totals.graphs},
                  {"passed", totals.passed},
                  {"pass_rate", rate},
                  {"precondition_violations", totals.precondition_violations},
                  {"verification_failures", totals.verification_failures},
                  {"parse_errors", totals.parse_errors},
                  {"repairs", {{"total", totals.repairs}, {"max_per_graph", totals.max_repairs}}},
                  {"timing_ms", {{"total", totals.total_ms}, {"max", totals.max_ms}}},
                  {"failures", totals.failures}};
      emit(out, doc, output);
      return totals.verification_failures > 0 ? kVerificationFailed : kOk;
    }
  } catch (const PreconditionFailure& e) {
    Json doc = {{"error", e.what()}};
    for (auto& [key, value] : e.detail.items()) doc[key] = value;
    out << doc.dump(2) << '\n';
    err << "equipart: " << e.what() << '\n';
    return kPreconditionViolated;
  } catch (const PreconditionViolation& e) {
    out << Json{{"error", e.what()}}.dump(2) << '\n';
    err << "equipart: " << e.what() << '\n';
    return kPreconditionViolated;
  } catch (const CliError& e) {
    err << "equipart: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "equipart: " << e.what() << '\n';
    return kUsageError;
  } catch (const fs::filesystem_error& e) {
    err << "equipart: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace equipart::cli
