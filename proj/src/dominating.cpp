#include <algorithm>
#include <cmath>

#include "bitgraph.hpp"
#include "rainbowdom/solvers.hpp"

namespace rainbowdom {

namespace detail {

BitGraph::BitGraph(const Graph& g) : n(g.order()) {
  if (n > kSolverCapacity)
    throw Error(ErrorCode::CapacityExceeded,
                "order " + std::to_string(n) + " exceeds solver capacity " +
                    std::to_string(kSolverCapacity));
  all = n == 64 ? ~Mask{0} : (bit(n) - 1);
  open.assign(n, 0);
  closed.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) open[v] |= bit(u);
    closed[v] = open[v] | bit(v);
  }
}

void check_component_capacity(const Graph& g, int factor) {
  for (const auto& comp : components(g)) {
    if (static_cast<long long>(comp.size()) * factor > kSolverCapacity)
      throw Error(ErrorCode::CapacityExceeded,
                  "component of order " + std::to_string(comp.size()) +
                      (factor > 1 ? " (x" + std::to_string(factor) + ")" : std::string()) +
                      " exceeds solver capacity " + std::to_string(kSolverCapacity));
  }
}

std::vector<ComponentView> split_components(const Graph& g) {
  std::vector<ComponentView> out;
  for (const auto& comp : components(g)) {
    out.push_back({induced_subgraph(g, comp), comp.members()});
  }
  return out;
}

Mask greedy_cover(const std::vector<Mask>& cover, Mask scope, Mask pool) {
  Mask chosen = 0;
  Mask left = scope;
  while (left) {
    int best = -1;
    int best_gain = 0;
    for_each_bit(pool & ~chosen, [&](int u) {
      const int gain = count(cover[u] & left);
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    });
    if (best < 0) throw Error(ErrorCode::IsolatedVertex, "no cover exists for some vertex");
    chosen |= bit(best);
    left &= ~cover[best];
  }
  return chosen;
}

}  // namespace detail

namespace {

using detail::bit;
using detail::count;
using detail::for_each_bit;
using detail::lowest;
using detail::Mask;

// Minimum S with every vertex x covered by some u in S, where "u covers x"
// is symmetric and given by cover[x] (closed neighbourhoods for domination,
// open ones for total domination).
class CoverSearch {
 public:
  CoverSearch(const std::vector<Mask>& cover, Mask scope, detail::NodeCounter& counter)
      : cover_(cover), scope_(scope), counter_(counter) {}

  Mask solve() {
    const Mask greedy = detail::greedy_cover(cover_, scope_, scope_);
    const int upper = count(greedy);
    const int lower = static_cast<int>(std::ceil(bound(scope_, 0) - 1e-9));
    for (int target = std::max(lower, 1); target < upper; ++target) {
      if (dfs(scope_, 0, 0, target)) return found_;
    }
    return greedy;
  }

 private:
  // Fractional lower bound on the number of further picks; -1 if some
  // uncovered vertex has no candidate left.
  double bound(Mask uncovered, Mask excluded) const {
    double total = 0;
    Mask rest = uncovered;
    while (rest) {
      const int x = lowest(rest);
      rest &= rest - 1;
      const Mask candidates = cover_[x] & ~excluded;
      if (!candidates) return -1;
      int best = 0;
      for_each_bit(candidates, [&](int u) { best = std::max(best, count(cover_[u] & uncovered)); });
      total += 1.0 / best;
    }
    return total;
  }

  bool dfs(Mask uncovered, Mask excluded, Mask chosen, int budget) {
    counter_.tick();
    if (!uncovered) {
      found_ = chosen;
      return true;
    }
    if (budget == 0) return false;
    const double lb = bound(uncovered, excluded);
    if (lb < 0 || lb > budget + 1e-9) return false;

    const int x = lowest(uncovered);
    Mask candidates = cover_[x] & ~excluded;
    std::vector<int> order;
    for_each_bit(candidates, [&](int u) { order.push_back(u); });
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return count(cover_[a] & uncovered) > count(cover_[b] & uncovered);
    });
    for (int u : order) {
      if (dfs(uncovered & ~cover_[u], excluded, chosen | bit(u), budget - 1)) return true;
      excluded |= bit(u);
    }
    return false;
  }

  const std::vector<Mask>& cover_;
  Mask scope_;
  detail::NodeCounter& counter_;
  Mask found_ = 0;
};

SetResult solve_cover(const Graph& g, bool total, const SolverOptions& options) {
  if (total && has_isolated_vertex(g))
    throw Error(ErrorCode::IsolatedVertex, "total domination undefined with isolated vertices");
  detail::check_component_capacity(g);
  detail::NodeCounter counter(options.node_budget);
  std::vector<Vertex> chosen;
  for (const auto& comp : detail::split_components(g)) {
    const detail::BitGraph bg(comp.graph);
    CoverSearch search(total ? bg.open : bg.closed, bg.all, counter);
    for_each_bit(search.solve(), [&](int u) { chosen.push_back(comp.original[u]); });
  }
  SetResult result;
  result.witness = VertexSet(std::move(chosen));
  result.value = static_cast<int>(result.witness.size());
  result.nodes_explored = counter.nodes();
  return result;
}

}  // namespace

SetResult min_dominating_set(const Graph& g, const SolverOptions& options) {
  return solve_cover(g, false, options);
}

SetResult min_total_dominating_set(const Graph& g, const SolverOptions& options) {
  return solve_cover(g, true, options);
}

}  // namespace rainbowdom
