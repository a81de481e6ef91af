#include <gtest/gtest.h>

#include <functional>

#include "rainbowdom/constructions.hpp"
#include "rainbowdom/products.hpp"

namespace rainbowdom {
namespace {

PairWitness p4_pair() { return *pair_witness(gen_path(4)); }

TEST(Tiles, TablesAndWeights) {
  const auto& t = tiles();
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t.begin()->first, 2);
  EXPECT_EQ(t.rbegin()->first, 8);
  EXPECT_EQ(t.at(7).weight(), 6);
  EXPECT_EQ(t.at(8).weight(), 8);
  EXPECT_EQ(t.at(4).weight(), 4);
  for (const auto& [len, tile] : t) {
    EXPECT_EQ(tile.length, len);
    EXPECT_EQ(tile.weight(), path_upper_bound(len));
  }
  EXPECT_EQ(t.at(5).u_row[2], ColorSet::of({1}));
  EXPECT_EQ(t.at(5).u_row[1], ColorSet::of({2}));
  EXPECT_THROW(PatternTile::parse("04", "00"), Error);
  EXPECT_THROW(PatternTile::parse("0", "00"), Error);
}

TEST(PathBound, Formula) {
  EXPECT_EQ(path_upper_bound(7), 6);
  EXPECT_EQ(path_upper_bound(8), 8);
  EXPECT_EQ(path_upper_bound(5), 5);
  EXPECT_EQ(path_upper_bound(9), 9);
  EXPECT_EQ(path_upper_bound(14), 12);
  EXPECT_EQ(path_upper_bound(15), 14);
  try {
    path_upper_bound(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooSmall);
  }
}

TEST(PathBound, TilingSumsToN) {
  EXPECT_EQ(path_tiling(9), (std::vector<int>{7, 2}));
  EXPECT_EQ(path_tiling(15), (std::vector<int>{7, 8}));
  EXPECT_EQ(path_tiling(14), (std::vector<int>{7, 7}));
  for (int n = 2; n <= 60; ++n) {
    int sum = 0;
    int weight = 0;
    for (int len : path_tiling(n)) {
      sum += len;
      weight += tiles().at(len).weight();
    }
    EXPECT_EQ(sum, n);
    EXPECT_EQ(weight, path_upper_bound(n));
  }
}

TEST(PathPattern, ValidOnP4) {
  const PairWitness pw = p4_pair();
  for (int n = 2; n <= 30; ++n) {
    const RainbowLabeling f = path_pattern_labeling(n, gen_path(4), pw);
    const ProductGraph p = lexicographic(gen_path(n), gen_path(4));
    EXPECT_TRUE(is_k_rainbow_dominating(p.graph, f).valid) << n;
    EXPECT_EQ(f.weight(), path_upper_bound(n));
    for (Vertex v = 0; v < f.order(); ++v) {
      const Vertex row = p.index.decode(v).second;
      if (row != pw.u && row != *pw.v) EXPECT_TRUE(f[v].empty());
    }
  }
  EXPECT_EQ(min_rainbow(lexicographic(gen_path(2), gen_path(4)).graph, 2).value, 3);
}

TEST(PathPattern, RejectsBadPair) {
  const PairWitness pw = p4_pair();
  PairWitness bad = pw;
  bad.v.reset();
  try {
    path_pattern_labeling(5, gen_path(4), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoPairWitness);
  }
  EXPECT_THROW(path_pattern_labeling(1, gen_path(4), pw), Error);
}

TEST(Explicit, TotalAndUniversal) {
  const RainbowLabeling t = total_dom_labeling(gen_path(4), gen_path(3), 2);
  EXPECT_EQ(t.weight(), 4);
  EXPECT_TRUE(is_k_rainbow_dominating(lexicographic(gen_path(4), gen_path(3)).graph, t).valid);

  const RainbowLabeling u = universal_vertex_labeling(gen_path(3), gen_star(4), 2);
  EXPECT_EQ(u.weight(), 2);
  EXPECT_TRUE(is_k_rainbow_dominating(lexicographic(gen_path(3), gen_star(4)).graph, u).valid);

  try {
    universal_vertex_labeling(gen_path(3), gen_path(4), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoUniversalVertex);
  }
  try {
    total_dom_labeling(Graph(1), gen_path(3), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsolatedVertex);
  }
}

TEST(Explicit, TotalDomUpperBoundsOnCorpus) {
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int k = 1; k <= 3; ++k) {
        const Graph h = gen_cycle(4);
        const ProductGraph p = lexicographic(g, h);
        const RainbowLabeling f = total_dom_labeling(g, h, k);
        EXPECT_EQ(f.weight(), k * min_total_dominating_set(g).value);
        EXPECT_TRUE(is_k_rainbow_dominating(p.graph, f).valid);
        EXPECT_GE(f.weight(), min_rainbow(p.graph, k).value);
      }
}

// Every assignment to rows u, v of the centre and arm columns of
// gen_glued_paths(1,1) ∘ P_4 of weight at most 6, pendant column empty.
TEST(GluedPattern, PerArmSearchOracle) {
  const Graph g = gen_glued_paths(1, 1);
  const Graph h = gen_path(4);
  const PairWitness pw = p4_pair();
  const ProductGraph p = lexicographic(g, h);
  std::vector<Vertex> cells;
  for (Vertex col = 0; col <= 5; ++col) {
    cells.push_back(p.index.encode(col, pw.u));
    cells.push_back(p.index.encode(col, *pw.v));
  }
  RainbowLabeling f(2, p.graph.order());
  int best = 99;
  int valid_at_best = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == cells.size()) {
      if (!is_k_rainbow_dominating(p.graph, f).valid) return;
      const int w = f.weight();
      if (w < best) {
        best = w;
        valid_at_best = 0;
      }
      if (w == best) valid_at_best++;
      return;
    }
    for (std::uint8_t bits = 0; bits < 4; ++bits) {
      const ColorSet c = ColorSet::from_bits(bits);
      if (c.size() > budget) continue;
      f.set(cells[i], c);
      rec(i + 1, budget - c.size());
    }
    f.set(cells[i], ColorSet());
  };
  rec(0, 6);
  EXPECT_EQ(best, 6);
  EXPECT_GT(valid_at_best, 0);

  const RainbowLabeling frozen = glued_family_labeling(1, 1, h, pw);
  EXPECT_TRUE(is_k_rainbow_dominating(p.graph, frozen).valid);
  EXPECT_EQ(frozen.weight(), best);
}

TEST(GluedPattern, ComposesAcrossArms) {
  const PairWitness pw = p4_pair();
  for (int m = 1; m <= 3; ++m)
    for (int p2 = 0; p2 <= 3; ++p2) {
      const RainbowLabeling f = glued_family_labeling(m, p2, gen_path(4), pw);
      const ProductGraph p = lexicographic(gen_glued_paths(m, p2), gen_path(4));
      EXPECT_TRUE(is_k_rainbow_dominating(p.graph, f).valid) << m << "," << p2;
      EXPECT_EQ(f.weight(), 4 * m + 2);
    }
  const GluedPattern& gp = glued_pattern();
  EXPECT_EQ(gp.arm_u.size(), 5u);
  EXPECT_EQ(gp.arm_v.size(), 5u);
}

}  // namespace
}  // namespace rainbowdom
