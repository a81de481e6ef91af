#pragma once

#include "rainbowdom/graph.hpp"
#include "rainbowdom/labeling.hpp"
#include "rainbowdom/products.hpp"
#include "rainbowdom/solvers.hpp"

namespace rainbowdom {

/// Ordered pair (A, B) of disjoint vertex sets.
struct DominatingCouple {
  VertexSet a;
  VertexSet b;
  friend bool operator==(const DominatingCouple&, const DominatingCouple&) = default;
};

/// Every vertex outside B has a neighbour in A ∪ B. Throws NotDisjoint.
bool is_dominating_couple(const Graph& g, const VertexSet& a, const VertexSet& b);
inline bool is_dominating_couple(const Graph& g, const DominatingCouple& c) {
  return is_dominating_couple(g, c.a, c.b);
}

struct CoupleResult {
  int value = 0;
  DominatingCouple couple;
  std::uint64_t nodes_explored = 0;
};

/// min cost_a*|A| + cost_b*|B| over dominating couples of G.
CoupleResult min_couple_cost(const Graph& g, int cost_a, int cost_b,
                             const SolverOptions& options = {});

/// Labeling of G∘H: [k] on (g,0) for g in A, a minimum all-colors k-RDF of H
/// on every layer above B, empty elsewhere.
RainbowLabeling couple_labeling(const Graph& g, const Graph& h, int k, const DominatingCouple& couple,
                                const SolverOptions& options = {});

}  // namespace rainbowdom
