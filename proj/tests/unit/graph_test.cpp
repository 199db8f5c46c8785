#include <gtest/gtest.h>

#include <random>

#include "equipart/errors.hpp"
#include "equipart/generators.hpp"
#include "equipart/graph.hpp"

namespace equipart {
namespace {

TEST(Graph, CollapsesDuplicateEdges) {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, RejectsLoopsAndOutOfRangeEndpoints) {
  EXPECT_THROW(Graph(3, {{1, 1}}), BadParameters);
  EXPECT_THROW(Graph(3, {{0, 3}}), BadParameters);
  EXPECT_THROW(Graph(3, {{-1, 0}}), BadParameters);
}

TEST(Graph, EdgeCountIsHalfTheDegreeSum) {
  const auto g = icosahedron_graph();
  std::size_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += static_cast<std::size_t>(g.degree(v));
  EXPECT_EQ(total, 2 * g.size());
  EXPECT_EQ(g.edges().size(), g.size());
}

TEST(ParseGraph, Graph6CompleteGraph) {
  const auto g = parse_graph("C~", GraphFormat::graph6);
  EXPECT_EQ(g, complete_graph(4));
  EXPECT_EQ(g.size(), 6u);
}

TEST(ParseGraph, Graph6AcceptsHeaderAndTrailingNewline) {
  EXPECT_EQ(parse_graph(">>graph6<<C~\n", GraphFormat::graph6), complete_graph(4));
}

TEST(ParseGraph, Graph6RoundTrip) {
  for (const auto& g : {petersen_graph(), icosahedron_graph(), cube_graph(), path_graph(1),
                        empty_graph(0), grid_graph(4, 5)}) {
    EXPECT_EQ(parse_graph(to_graph6(g), GraphFormat::graph6), g);
  }
}

TEST(ParseGraph, Graph6KnownEncodings) {
  // Path 0-1-2: size byte 'B', then bits (0,1)=1 (0,2)=0 (1,2)=1 padded
  // to 101000.
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(to_graph6(empty_graph(5)), "D??");
}

TEST(ParseGraph, Graph6ForeignPetersen) {
  // Encoding written by another graph library; labels differ from ours.
  const auto g = parse_graph("IheA@GUAo", GraphFormat::graph6);
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(ParseGraph, Graph6Errors) {
  EXPECT_THROW(parse_graph("C", GraphFormat::graph6), MalformedInput);
  EXPECT_THROW(parse_graph("C~~", GraphFormat::graph6), MalformedInput);
  EXPECT_THROW(parse_graph("C\x20", GraphFormat::graph6), MalformedInput);
  EXPECT_THROW(parse_graph("C~\nC~\n", GraphFormat::graph6), MalformedInput);
  EXPECT_THROW(parse_graph("~??@", GraphFormat::graph6), MalformedInput);
  EXPECT_THROW(to_graph6(empty_graph(kMaxGraph6Order + 1)), BadParameters);
}

TEST(ParseGraph, EdgeListSingleVertex) {
  const auto g = parse_graph("1\n", GraphFormat::edge_list);
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0u);
}

TEST(ParseGraph, EdgeListPath) {
  EXPECT_EQ(parse_graph("4\n0 1\n1 2\n2 3", GraphFormat::edge_list), path_graph(4));
}

TEST(ParseGraph, EdgeListWithoutHeaderUsesLargestId) {
  const auto g = parse_graph("# comment\n0 1\n\n3 1\n", GraphFormat::edge_list);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 2u);
}

TEST(ParseGraph, EdgeListErrorsCarryLine) {
  try {
    parse_graph("3\n0 1\n1 x\n", GraphFormat::edge_list);
    FAIL() << "expected MalformedInput";
  } catch (const MalformedInput& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_graph("2\n0 5\n", GraphFormat::edge_list), MalformedInput);
  EXPECT_THROW(parse_graph("2\n0 0\n", GraphFormat::edge_list), MalformedInput);
}

TEST(ParseGraph, EdgeListReserializationIsStable) {
  const auto text = to_edge_list(petersen_graph());
  const auto again = to_edge_list(parse_graph(text, GraphFormat::edge_list));
  EXPECT_EQ(text, again);
  const auto shuffled = parse_graph("3\n2 1\n0 2\n", GraphFormat::edge_list);
  EXPECT_EQ(to_edge_list(shuffled), "3\n0 2\n1 2\n");
}

TEST(ParseGraph, DetectFormat) {
  EXPECT_EQ(detect_format("C~\n"), GraphFormat::graph6);
  EXPECT_EQ(detect_format(">>graph6<<C~"), GraphFormat::graph6);
  EXPECT_EQ(detect_format("4\n0 1\n"), GraphFormat::edge_list);
  EXPECT_EQ(detect_format("0 1\n"), GraphFormat::edge_list);
}

TEST(EdgesBetween, Examples) {
  const auto k4 = complete_graph(4);
  EXPECT_EQ(edges_between(k4, VertexSet{0, 1}, VertexSet{2, 3}), 4u);
  EXPECT_EQ(edges_between(k4, VertexSet{}, VertexSet{0, 1, 2}), 0u);
  EXPECT_EQ(edges_between(path_graph(4), VertexSet{0, 3}, VertexSet{1, 2}), 2u);
  EXPECT_THROW(edges_between(k4, VertexSet{0, 1}, VertexSet{1, 2}), OverlappingSets);
}

TEST(EdgesBetween, AdditiveOverDisjointUnions) {
  std::mt19937_64 rng(5);
  const auto g = gen_planar({GenKind::flipped_triangulation, 20, 30, std::nullopt, 9});
  for (int trial = 0; trial < 50; ++trial) {
    VertexSet u, v, w;
    for (Vertex x = 0; x < g.order(); ++x) {
      switch (rng() % 4) {
        case 0: u.push_back(x); break;
        case 1: v.push_back(x); break;
        case 2: w.push_back(x); break;
        default: break;
      }
    }
    VertexSet vw = v;
    vw.insert(vw.end(), w.begin(), w.end());
    std::sort(vw.begin(), vw.end());
    EXPECT_EQ(edges_between(g, u, vw), edges_between(g, u, v) + edges_between(g, u, w));
  }
}

TEST(NeighborsIn, IgnoresTheVertexItself) {
  const auto k4 = complete_graph(4);
  EXPECT_EQ(neighbors_in(k4, 0, VertexSet{0, 1, 2}), 2);
  EXPECT_EQ(neighbors_in(k4, 3, VertexSet{}), 0);
}

TEST(MakeVertexSet, SortsAndRejectsRepeats) {
  EXPECT_EQ(make_vertex_set({3, 1, 2}), (VertexSet{1, 2, 3}));
  EXPECT_THROW(make_vertex_set({1, 1}), OverlappingSets);
}

}  // namespace
}  // namespace equipart
