#include "equipart/serialize.hpp"

#include "equipart/errors.hpp"

namespace equipart {
namespace {

const char* problem_name(MembershipWitness::Problem p) {
  switch (p) {
    case MembershipWitness::Problem::missing:
      return "missing";
    case MembershipWitness::Problem::repeated:
      return "repeated";
    case MembershipWitness::Problem::out_of_range:
      return "out_of_range";
  }
  return "?";
}

std::vector<VertexSet> classes_from_json(const Json& arr, const char* what) {
  if (!arr.is_array()) throw MalformedInput(std::string(what) + " must be an array", 1, 0);
  std::vector<VertexSet> out;
  for (const auto& cls : arr) {
    if (!cls.is_array()) {
      throw MalformedInput(std::string(what) + " entries must be arrays of vertex ids", 1, 0);
    }
    VertexSet members;
    for (const auto& v : cls) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw MalformedInput("vertex ids must be non-negative integers", 1, 0);
      }
      members.push_back(v.get<Vertex>());
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::string to_string(ColoringKind kind) {
  return kind == ColoringKind::acyclic ? "acyclic" : "proper";
}

Json to_json(const Witness& w) {
  return std::visit(
      [](const auto& wit) -> Json {
        using T = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, CycleWitness>) {
          return {{"type", "cycle"}, {"vertices", wit.cycle}};
        } else if constexpr (std::is_same_v<T, DenseCoreWitness>) {
          return {{"type", "dense_core"}, {"vertices", wit.core}, {"min_degree_above", wit.d}};
        } else if constexpr (std::is_same_v<T, ImbalanceWitness>) {
          return {{"type", "imbalance"},
                  {"parts", {wit.larger_part, wit.smaller_part}},
                  {"sizes", {wit.larger_size, wit.smaller_size}}};
        } else if constexpr (std::is_same_v<T, TriangleWitness>) {
          return {{"type", "triangle"}, {"vertices", wit.vertices}};
        } else if constexpr (std::is_same_v<T, EdgeWitness>) {
          return {{"type", "edge"}, {"vertices", {wit.edge.u, wit.edge.v}}};
        } else if constexpr (std::is_same_v<T, DegreeWitness>) {
          return {{"type", "degree"}, {"vertex", wit.vertex}, {"degree", wit.degree}};
        } else if constexpr (std::is_same_v<T, MembershipWitness>) {
          return {{"type", "membership"}, {"vertex", wit.vertex}, {"problem", problem_name(wit.problem)}};
        } else {
          return {{"type", "part_count"}, {"expected", wit.expected}, {"actual", wit.actual}};
        }
      },
      w);
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", to_json(c.witness)}});
  }
  return {{"verdict", r.pass() ? "pass" : "fail"}, {"checks", std::move(checks)}};
}

Json to_json(const Partition& p) {
  Json trace = Json::array();
  for (const auto& e : p.trace) {
    trace.push_back({{"step", e.step},
                     {"kind", "swap"},
                     {"from_part", e.from_part},
                     {"to_part", e.to_part},
                     {"moved", {e.moved_out, e.moved_in}}});
  }
  return {{"parts", p.parts}, {"trace", std::move(trace)}};
}

Json to_json(const MergeResult& r) {
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back({{"members", p.members}, {"from", p.from}});
  return {{"B0", r.leftover},
          {"B", std::move(parts)},
          {"I", r.leftover_classes},
          {"q", r.quota},
          {"r", r.threshold}};
}

Json to_json(const Coloring& c) {
  return {{"kind", to_string(c.kind)}, {"classes", c.classes}};
}

Json to_json(const EliminationStep& step) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EdgeStep>) {
          return {{"kind", "edge"}, {"v", s.v}, {"v1", s.v1}};
        } else if constexpr (std::is_same_v<T, LowVertexStep>) {
          return {{"kind", "vertex"}, {"v", s.v}};
        } else {
          return {{"kind", "pair"}, {"u", s.u}, {"v", s.v}};
        }
      },
      step);
}

std::string to_json_lines(const EliminationSequence& seq) {
  std::string out;
  for (const auto& step : seq.steps) {
    out += to_json(step).dump();
    out += '\n';
  }
  return out;
}

Coloring coloring_from_json(const Json& j) {
  Coloring c;
  if (j.is_array()) {
    c.classes = classes_from_json(j, "colouring");
    return c;
  }
  if (!j.is_object() || !j.contains("classes")) {
    throw MalformedInput("a colouring needs a \"classes\" array", 1, 0);
  }
  if (j.contains("kind")) {
    const auto kind = j.at("kind");
    if (kind == "acyclic") {
      c.kind = ColoringKind::acyclic;
    } else if (kind != "proper") {
      throw MalformedInput("colouring kind must be \"proper\" or \"acyclic\"", 1, 0);
    }
  }
  c.classes = classes_from_json(j.at("classes"), "classes");
  return c;
}

Partition partition_from_json(const Json& j) {
  Partition p;
  if (j.is_array()) {
    p.parts = classes_from_json(j, "partition");
  } else if (j.is_object() && j.contains("parts")) {
    p.parts = classes_from_json(j.at("parts"), "parts");
  } else {
    throw MalformedInput("a partition needs a \"parts\" array", 1, 0);
  }
  return p;
}

}  // namespace equipart
