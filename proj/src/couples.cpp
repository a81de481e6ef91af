#include "rainbowdom/couples.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "bitgraph.hpp"

namespace rainbowdom {

bool is_dominating_couple(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.check_set(a);
  g.check_set(b);
  for (Vertex v : a)
    if (b.contains(v)) throw Error(ErrorCode::NotDisjoint, "vertex " + std::to_string(v) + " in both A and B");
  std::vector<bool> in_union(g.order(), false);
  for (Vertex v : a) in_union[v] = true;
  for (Vertex v : b) in_union[v] = true;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (b.contains(x)) continue;
    const auto& nbrs = g.neighbors(x);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in_union[w]; })) return false;
  }
  return true;
}

namespace {

using detail::bit;
using detail::count;
using detail::for_each_bit;
using detail::lowest;
using detail::Mask;

// IDA* over couples. A vertex x outside B is satisfied once some neighbour
// lies in A ∪ B; branching puts x itself into B or one of its neighbours
// into A or B.
class CoupleSearch {
 public:
  CoupleSearch(const detail::BitGraph& g, int cost_a, int cost_b, detail::NodeCounter& counter)
      : g_(g), cost_a_(cost_a), cost_b_(cost_b), cheapest_(std::min(cost_a, cost_b)), counter_(counter) {}

  DominatingCouple solve(int& value) {
    Mask a = 0;
    Mask b = 0;
    int threshold = lower_cost(g_.all, 0, 0, 0);
    while (true) {
      next_threshold_ = INT_MAX;
      if (dfs(0, 0, 0, 0, 0, threshold)) {
        a = found_a_;
        b = found_b_;
        break;
      }
      if (next_threshold_ == INT_MAX)
        throw Error(ErrorCode::InvalidArgument, "couple search exhausted without a solution");
      threshold = next_threshold_;
    }
    value = cost_a_ * count(a) + cost_b_ * count(b);
    DominatingCouple couple;
    for_each_bit(a, [&](int v) { couple.a.insert(v); });
    for_each_bit(b, [&](int v) { couple.b.insert(v); });
    return couple;
  }

 private:
  Mask unsatisfied(Mask a, Mask b) const {
    const Mask chosen = a | b;
    Mask out = 0;
    for (int x = 0; x < g_.n; ++x)
      if (!(b & bit(x)) && !(g_.open[x] & chosen)) out |= bit(x);
    return out;
  }

  Mask candidates(int x, Mask chosen, Mask no_b, Mask no_s) const {
    Mask c = g_.open[x] & ~chosen & ~no_s;
    if (!(chosen & bit(x)) && !(no_b & bit(x)) && !(no_s & bit(x))) c |= bit(x);
    return c;
  }

  // Returns -1 when infeasible.
  int lower_cost(Mask unsat, Mask chosen, Mask no_b, Mask no_s) const {
    double picks = 0;
    Mask rest = unsat;
    while (rest) {
      const int x = lowest(rest);
      rest &= rest - 1;
      const Mask c = candidates(x, chosen, no_b, no_s);
      if (!c) return -1;
      int best = 0;
      for_each_bit(c, [&](int u) { best = std::max(best, count(g_.closed[u] & unsat)); });
      picks += 1.0 / best;
    }
    return cheapest_ * static_cast<int>(std::ceil(picks - 1e-9));
  }

  bool dfs(Mask a, Mask b, Mask no_b, Mask no_s, int cost, int threshold) {
    counter_.tick();
    if (cost > threshold) {
      next_threshold_ = std::min(next_threshold_, cost);
      return false;
    }
    const Mask unsat = unsatisfied(a, b);
    if (!unsat) {
      found_a_ = a;
      found_b_ = b;
      return true;
    }
    const Mask chosen = a | b;
    const int lb = lower_cost(unsat, chosen, no_b, no_s);
    if (lb < 0) return false;
    if (cost + lb > threshold) {
      next_threshold_ = std::min(next_threshold_, cost + lb);
      return false;
    }
    const int x = lowest(unsat);
    if (!(chosen & bit(x)) && !(no_b & bit(x)) && !(no_s & bit(x))) {
      if (dfs(a, b | bit(x), no_b, no_s, cost + cost_b_, threshold)) return true;
      no_b |= bit(x);
    }
    Mask rest = g_.open[x] & ~chosen & ~no_s;
    while (rest) {
      const int u = lowest(rest);
      rest &= rest - 1;
      if (dfs(a | bit(u), b, no_b, no_s, cost + cost_a_, threshold)) return true;
      if (!(no_b & bit(u)) && dfs(a, b | bit(u), no_b, no_s, cost + cost_b_, threshold)) return true;
      no_s |= bit(u);
    }
    return false;
  }

  const detail::BitGraph& g_;
  int cost_a_;
  int cost_b_;
  int cheapest_;
  detail::NodeCounter& counter_;
  int next_threshold_ = INT_MAX;
  Mask found_a_ = 0;
  Mask found_b_ = 0;
};

}  // namespace

CoupleResult min_couple_cost(const Graph& g, int cost_a, int cost_b, const SolverOptions& options) {
  if (cost_a < 1 || cost_b < 1) throw Error(ErrorCode::InvalidArgument, "couple costs must be >= 1");
  detail::check_component_capacity(g);
  detail::NodeCounter counter(options.node_budget);
  CoupleResult result;
  for (const auto& part : detail::split_components(g)) {
    const detail::BitGraph bg(part.graph);
    CoupleSearch search(bg, cost_a, cost_b, counter);
    int value = 0;
    const DominatingCouple local = search.solve(value);
    result.value += value;
    for (Vertex v : local.a) result.couple.a.insert(part.original[v]);
    for (Vertex v : local.b) result.couple.b.insert(part.original[v]);
  }
  result.nodes_explored = counter.nodes();
  return result;
}

RainbowLabeling couple_labeling(const Graph& g, const Graph& h, int k, const DominatingCouple& couple,
                                const SolverOptions& options) {
  if (!is_dominating_couple(g, couple))
    throw Error(ErrorCode::NotDominatingCouple, "(A,B) is not a dominating couple");
  if (h.order() < k) throw Error(ErrorCode::HTooSmall, "|V(H)| < k");
  const ProductIndex index(g.order(), h.order());
  RainbowLabeling f(k, index.order());
  for (Vertex a : couple.a) f.set(index.encode(a, 0), ColorSet::full(k));
  if (couple.b.empty()) return f;

  RainbowResult layer = min_rainbow(h, k, options);
  if (layer.witness.colors_used() != ColorSet::full(k)) {
    RainbowResult constrained = min_rainbow_all_colors(h, k, options);
    if (constrained.value != layer.value)
      throw Error(ErrorCode::InvalidArgument,
                  "no minimum k-RDF of H uses all colors (constrained optimum " +
                      std::to_string(constrained.value) + " > " + std::to_string(layer.value) + ")");
    layer = std::move(constrained);
  }
  for (Vertex b : couple.b)
    for (Vertex x = 0; x < h.order(); ++x) f.set(index.encode(b, x), layer.witness[x]);
  return f;
}

}  // namespace rainbowdom
