#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "rainbowdom/graph.hpp"
#include "rainbowdom/solvers.hpp"

namespace rainbowdom::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int count(Mask m) { return std::popcount(m); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Adjacency as 64-bit masks; only for graphs of order <= 64.
struct BitGraph {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> open;
  std::vector<Mask> closed;

  explicit BitGraph(const Graph& g);
};

/// Throws CapacityExceeded unless every component fits in 64 vertices.
void check_component_capacity(const Graph& g, int factor = 1);

/// Restrict the graph to one component and renumber; returns the original
/// vertex for each new index.
struct ComponentView {
  Graph graph;
  std::vector<Vertex> original;
};
std::vector<ComponentView> split_components(const Graph& g);

/// Greedy set cover of `scope` using sets cover[u] (u ranges over `pool`).
Mask greedy_cover(const std::vector<Mask>& cover, Mask scope, Mask pool);

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++nodes_ > budget_)
      throw Error(ErrorCode::BudgetExceeded,
                  "search exceeded " + std::to_string(budget_) + " branch nodes");
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace rainbowdom::detail
