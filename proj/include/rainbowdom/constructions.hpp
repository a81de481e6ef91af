#pragma once

#include <map>
#include <string>
#include <vector>

#include "rainbowdom/graph.hpp"
#include "rainbowdom/labeling.hpp"
#include "rainbowdom/solvers.hpp"

namespace rainbowdom {

/// Two rows of digits 0..3 (empty, {1}, {2}, {1,2}) giving the labels on the
/// u- and v-rows of P_len ∘ H; every other row is empty.
struct PatternTile {
  int length = 0;
  std::vector<ColorSet> u_row;
  std::vector<ColorSet> v_row;

  int weight() const;
  static PatternTile parse(const std::string& u_digits, const std::string& v_digits);
};

/// The path tiles R_2 .. R_8, keyed by length.
const std::map<int, PatternTile>& tiles();

/// 6*floor(n/7) + r for r in {0,3,4,5,6}; one more for r in {1,2}. n >= 2.
int path_upper_bound(int n);

/// Tile lengths concatenated to cover P_n.
std::vector<int> path_tiling(int n);

/// 2-RDF of P_n ∘ H built from the tiles on rows pair.u and pair.v.
/// Requires gamma_r2(H) = 3 with a pair witness (u,v).
RainbowLabeling path_pattern_labeling(int n, const Graph& h, const PairWitness& pair);

/// [k] on (g, 0) for g in a minimum total dominating set of G.
RainbowLabeling total_dom_labeling(const Graph& g, const Graph& h, int k,
                                   const SolverOptions& options = {});

/// [k] on (g, w) for g in a minimum dominating set of G, w universal in H.
RainbowLabeling universal_vertex_labeling(const Graph& g, const Graph& h, int k,
                                          const SolverOptions& options = {});

/// Per-arm digits for the glued-path family: the centre column, then the five
/// arm columns moving away from the centre; pendant P_2 columns stay empty.
struct GluedPattern {
  std::string center_u;
  std::string center_v;
  std::string arm_u;
  std::string arm_v;
};
const GluedPattern& glued_pattern();

/// Weight 4m+2 2-RDF of gen_glued_paths(m, p2) ∘ H on rows pair.u, pair.v.
RainbowLabeling glued_family_labeling(int m, int p2, const Graph& h, const PairWitness& pair);

}  // namespace rainbowdom
