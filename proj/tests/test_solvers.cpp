#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbowdom/products.hpp"
#include "rainbowdom/solvers.hpp"

namespace rainbowdom {
namespace {

std::vector<Graph> corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (Graph& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

TEST(Domination, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(min_dominating_set(gen_complete(n)).value, 1);
  EXPECT_EQ(min_dominating_set(gen_path(7)).value, 3);
  EXPECT_EQ(min_total_dominating_set(gen_complete(2)).value, 2);
  EXPECT_EQ(min_total_dominating_set(gen_path(7)).value, 4);
  EXPECT_EQ(min_total_dominating_set(gen_cycle(4)).value, 2);
  try {
    min_total_dominating_set(Graph::from_edge_list(3, {{0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsolatedVertex);
  }
}

TEST(Domination, GluedFamily) {
  for (int m = 1; m <= 3; ++m)
    for (int p2 = 0; p2 <= 3; ++p2) {
      const Graph g = gen_glued_paths(m, p2);
      const int gamma = min_dominating_set(g).value;
      if (m <= 2) EXPECT_EQ(gamma, oracle::gamma(g));
      // One pendant at the centre forces it into every small dominating set.
      EXPECT_EQ(gamma, p2 >= 1 ? 2 * m + 1 : 2 * m) << m << "," << p2;
    }
}

TEST(Domination, AgreesWithOracle) {
  for (const Graph& g : corpus(6)) {
    const SetResult ds = min_dominating_set(g);
    EXPECT_EQ(ds.value, oracle::gamma(g));
    EXPECT_TRUE(is_dominating_set(g, ds.witness));
    EXPECT_EQ(static_cast<int>(ds.witness.size()), ds.value);
    if (g.order() < 2) continue;
    const SetResult tds = min_total_dominating_set(g);
    EXPECT_EQ(tds.value, oracle::gamma(g, true));
    EXPECT_TRUE(is_total_dominating_set(g, tds.witness));
    EXPECT_LE(ds.value, tds.value);
    EXPECT_LE(tds.value, 2 * ds.value);
  }
}

TEST(Rainbow, Examples) {
  EXPECT_EQ(min_rainbow(gen_path(4), 2).value, 3);
  EXPECT_EQ(min_rainbow(gen_cycle(4), 2).value, 2);
  EXPECT_EQ(min_rainbow(Graph(1), 2).value, 1);
  EXPECT_EQ(min_rainbow_via_cartesian(Graph(1), 2).value, 1);
  EXPECT_EQ(min_rainbow(gen_double_c4(), 2).value, 3);
  EXPECT_EQ(oracle::rainbow(gen_double_c4(), 2).minimum, 3);
  EXPECT_EQ(min_rainbow(gen_path(6), 2).value, 4);
}

TEST(Rainbow, AgreesWithOracleAndCartesianRoute) {
  for (const Graph& g : corpus(6))
    for (int k = 1; k <= 3; ++k) {
      if (k == 3 && g.order() > 5) continue;
      const RainbowResult direct = min_rainbow(g, k);
      const RainbowResult cart = min_rainbow_via_cartesian(g, k);
      const oracle::RainbowStats st = oracle::rainbow(g, k);
      EXPECT_EQ(direct.value, st.minimum) << to_graph6(g) << " k=" << k;
      EXPECT_EQ(cart.value, st.minimum) << to_graph6(g) << " k=" << k;
      EXPECT_TRUE(is_k_rainbow_dominating(g, direct.witness).valid);
      EXPECT_EQ(direct.witness.weight(), direct.value);
      EXPECT_TRUE(is_k_rainbow_dominating(g, cart.witness).valid);
      EXPECT_EQ(cart.witness.weight(), cart.value);
      if (k == 1) EXPECT_EQ(direct.value, oracle::gamma(g));
    }
}

TEST(Rainbow, DisconnectedGraphsSumComponents) {
  const Graph g = Graph::from_edge_list(9, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  EXPECT_EQ(min_rainbow(g, 2).value, 3 + 2 + 1);
  EXPECT_EQ(min_rainbow_via_cartesian(g, 2).value, 6);
  EXPECT_EQ(min_dominating_set(g).value, 2 + 2 + 1);
  EXPECT_EQ(oracle::rainbow(g, 2).minimum, 6);
}

TEST(Rainbow, AllColorsVariant) {
  EXPECT_EQ(min_rainbow_all_colors(gen_path(2), 2).value, 2);
  const RainbowResult r = min_rainbow_all_colors(gen_path(4), 2);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.witness.colors_used(), ColorSet::full(2));
  EXPECT_THROW(min_rainbow_all_colors(gen_path(2), 3), Error);
}

TEST(Rainbow, BudgetAndCapacity) {
  try {
    min_rainbow(gen_path(12), 2, SolverOptions{5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  try {
    min_dominating_set(gen_path(65));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapacityExceeded);
  }
  try {
    min_rainbow_via_cartesian(gen_path(40), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapacityExceeded);
  }
  // Components are bounded separately.
  std::vector<Edge> e;
  for (int v = 0; v + 1 < 60; ++v) e.emplace_back(v, v + 1);
  for (int v = 60; v + 1 < 120; ++v) e.emplace_back(v, v + 1);
  EXPECT_EQ(min_dominating_set(Graph::from_edge_list(120, e)).value, 40);
}

TEST(Enumeration, K2HasSixMinimumLabelings) {
  const oracle::RainbowStats st = oracle::rainbow(gen_path(2), 2);
  EXPECT_EQ(st.count, 6);
  const Enumeration all = enumerate_min_2rdfs(gen_path(2), 100);
  EXPECT_EQ(all.weight, 2);
  EXPECT_EQ(static_cast<int>(all.labelings.size()), st.count);
}

TEST(Enumeration, MatchesOracleCounts) {
  for (const Graph& g : corpus(6)) {
    const oracle::RainbowStats st = oracle::rainbow(g, 2);
    const Enumeration all = enumerate_min_2rdfs(g, 100000);
    ASSERT_TRUE(all.complete);
    EXPECT_EQ(all.weight, st.minimum);
    EXPECT_EQ(static_cast<int>(all.labelings.size()), st.count) << to_graph6(g);
    EXPECT_TRUE(std::is_sorted(all.labelings.begin(), all.labelings.end()));
    EXPECT_TRUE(std::adjacent_find(all.labelings.begin(), all.labelings.end()) == all.labelings.end());
    for (const auto& f : all.labelings) {
      EXPECT_EQ(f.weight(), all.weight);
      EXPECT_TRUE(is_k_rainbow_dominating(g, f).valid);
    }
  }
  const Enumeration k3 = enumerate_min_rdfs(gen_cycle(5), 3, 100000);
  EXPECT_EQ(static_cast<int>(k3.labelings.size()), oracle::rainbow(gen_cycle(5), 3).count);
}

TEST(Enumeration, CapTruncates) {
  const Enumeration part = enumerate_min_2rdfs(gen_path(2), 3);
  EXPECT_FALSE(part.complete);
  EXPECT_EQ(part.labelings.size(), 3u);
}

TEST(PairWitness, Examples) {
  const auto p4 = pair_witness(gen_path(4));
  ASSERT_TRUE(p4.has_value());
  ASSERT_TRUE(p4->v.has_value());
  EXPECT_EQ(p4->labeling[p4->u], ColorSet::full(2));
  EXPECT_EQ(p4->labeling[*p4->v], ColorSet::of({1}));
  EXPECT_EQ(p4->labeling.weight(), 3);
  EXPECT_EQ(gen_path(4).degree(p4->u), 2);
  EXPECT_EQ(gen_path(4).degree(*p4->v), 1);
  EXPECT_TRUE(is_k_rainbow_dominating(gen_path(4), p4->labeling).valid);
  EXPECT_FALSE(pair_witness(gen_path(5)).has_value());
  EXPECT_FALSE(pair_witness(gen_double_c4()).has_value());
}

TEST(PairWitness, AgreesWithEnumeration) {
  for (const Graph& g : corpus(6)) {
    const auto pw = pair_witness(g);
    EXPECT_EQ(pw.has_value(), oracle::rainbow(g, 2).pair) << to_graph6(g);
    if (!pw) continue;
    EXPECT_TRUE(is_k_rainbow_dominating(g, pw->labeling).valid);
    EXPECT_EQ(pw->labeling.weight(), min_rainbow(g, 2).value);
    if (pw->labeling.weight() == 3) {
      // Every vertex other than u and v must see color 2 at u.
      for (Vertex x = 0; x < g.order(); ++x)
        if (x != pw->u && x != *pw->v) EXPECT_TRUE(g.adjacent(x, pw->u));
    }
  }
}

}  // namespace
}  // namespace rainbowdom
