#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbowdom/products.hpp"

namespace rainbowdom {
namespace {

TEST(ProductIndex, RowMajorBijection) {
  const ProductIndex idx(3, 4);
  EXPECT_EQ(idx.order(), 12);
  EXPECT_EQ(idx.encode(2, 1), 9);
  for (Vertex v = 0; v < 12; ++v) {
    const auto [g, h] = idx.decode(v);
    EXPECT_EQ(idx.encode(g, h), v);
  }
  EXPECT_THROW(idx.encode(3, 0), Error);
  EXPECT_THROW(idx.decode(12), Error);
}

TEST(Lexicographic, MatchesDefinition) {
  for (const Graph& g : enumerate_connected_graphs(3))
    for (const Graph& h : enumerate_connected_graphs(4)) {
      const ProductGraph p = lexicographic(g, h);
      EXPECT_EQ(oracle::matrix(p.graph), oracle::lex_matrix(g, h));
    }
}

TEST(Lexicographic, SmallCases) {
  EXPECT_TRUE(are_isomorphic(lexicographic(Graph(1), gen_double_c4()).graph, gen_double_c4()));
  EXPECT_TRUE(are_isomorphic(lexicographic(gen_path(2), gen_path(2)).graph, gen_complete(4)));
  EXPECT_EQ(lexicographic(gen_path(3), gen_path(3)).graph.size(), 24u);
  EXPECT_EQ(lexicographic(gen_path(5), Graph(1)).graph, gen_path(5));
}

TEST(Lexicographic, AdjacentLayersFormAJoin) {
  const ProductGraph p = lexicographic(gen_path(2), gen_path(3));
  int cross = 0;
  for (Vertex a : h_layer(p.index, 0))
    for (Vertex b : h_layer(p.index, 1)) cross += p.graph.adjacent(a, b);
  EXPECT_EQ(cross, 9);
}

TEST(Lexicographic, LayersInduceFactors) {
  const Graph g = gen_double_c4();
  const Graph h = gen_path(3);
  const ProductGraph p = lexicographic(g, h);
  for (Vertex x = 0; x < g.order(); ++x) EXPECT_EQ(induced_subgraph(p.graph, h_layer(p.index, x)), h);
  for (Vertex y = 0; y < h.order(); ++y) EXPECT_EQ(induced_subgraph(p.graph, g_layer(p.index, y)), g);
}

TEST(Cartesian, SmallCases) {
  const ProductGraph q3 = cartesian(gen_cycle(4), gen_complete(2));
  EXPECT_EQ(q3.graph.size(), 12u);
  const Graph cube = Graph::from_edge_list(
      8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  EXPECT_TRUE(are_isomorphic(q3.graph, cube));
  EXPECT_TRUE(are_isomorphic(cartesian(Graph(1), gen_path(4)).graph, gen_path(4)));
  EXPECT_TRUE(are_isomorphic(cartesian(gen_path(2), gen_path(2)).graph, gen_cycle(4)));
  EXPECT_EQ(cartesian(gen_path(4), Graph(1)).graph, gen_path(4));
}

TEST(Layers, PartitionAndProject) {
  const ProductIndex idx(4, 3);
  VertexSet all;
  for (Vertex g = 0; g < 4; ++g) {
    EXPECT_EQ(project_g(idx, h_layer(idx, g)), (VertexSet{g}));
    for (Vertex v : h_layer(idx, g)) {
      EXPECT_FALSE(all.contains(v));
      all.insert(v);
    }
  }
  EXPECT_EQ(static_cast<int>(all.size()), idx.order());
  EXPECT_EQ(project_h(idx, g_layer(idx, 2)), (VertexSet{2}));
  EXPECT_THROW(h_layer(idx, 4), Error);
}

}  // namespace
}  // namespace rainbowdom
