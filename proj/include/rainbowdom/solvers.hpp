#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbowdom/graph.hpp"
#include "rainbowdom/labeling.hpp"

namespace rainbowdom {

/// Exact solvers work on bitmask adjacency: every connected component must
/// have at most this many vertices (times k for the Cartesian route).
inline constexpr int kSolverCapacity = 64;

struct SolverOptions {
  /// Branch nodes allowed across all deepening rounds and components.
  std::uint64_t node_budget = 100'000'000;
};

struct SetResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

struct RainbowResult {
  int value = 0;
  RainbowLabeling witness;
  std::uint64_t nodes_explored = 0;
};

/// gamma(G) with a minimum dominating set.
SetResult min_dominating_set(const Graph& g, const SolverOptions& options = {});

/// gamma_t(G); throws IsolatedVertex if some vertex has degree 0.
SetResult min_total_dominating_set(const Graph& g, const SolverOptions& options = {});

/// gamma_rk(G) by direct branch-and-bound over label values. Disconnected
/// graphs are solved per component and summed.
RainbowResult min_rainbow(const Graph& g, int k, const SolverOptions& options = {});

/// gamma_rk(G) computed as gamma(G x K_k) and mapped back to a labeling.
RainbowResult min_rainbow_via_cartesian(const Graph& g, int k, const SolverOptions& options = {});

/// Minimum weight over k-RDFs whose labels together use all k colors.
/// Requires |V(G)| >= k.
RainbowResult min_rainbow_all_colors(const Graph& g, int k, const SolverOptions& options = {});

struct Enumeration {
  int weight = 0;
  std::vector<RainbowLabeling> labelings;
  /// False when the cap cut the enumeration short; the list is then partial.
  bool complete = true;
};

/// Every k-RDF of minimum weight, without duplicates, sorted
/// lexicographically by label sequence.
Enumeration enumerate_min_rdfs(const Graph& g, int k, std::size_t cap,
                               const SolverOptions& options = {});

inline Enumeration enumerate_min_2rdfs(const Graph& g, std::size_t cap,
                                       const SolverOptions& options = {}) {
  return enumerate_min_rdfs(g, 2, cap, options);
}

struct PairWitness {
  /// Vertex carrying {1,2}.
  Vertex u = 0;
  /// The other nonempty vertex when gamma_r2(H) = 3; its label is {1}.
  std::optional<Vertex> v;
  RainbowLabeling labeling;
};

/// A minimum 2-RDF of H with a {1,2} label, if one exists. Colors are
/// normalized so that v carries {1}.
std::optional<PairWitness> pair_witness(const Graph& h, const SolverOptions& options = {});

}  // namespace rainbowdom
