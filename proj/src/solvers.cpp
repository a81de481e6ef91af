#include <algorithm>
#include <optional>

#include "bitgraph.hpp"
#include "rainbow_search.hpp"
#include "rainbowdom/products.hpp"
#include "rainbowdom/solvers.hpp"

namespace rainbowdom {

namespace {

using detail::LabelState;
using detail::RainbowSearch;

void check_k(int k) {
  if (k < 1 || k > kMaxColors)
    throw Error(ErrorCode::InvalidArgument, "k must be in [1," + std::to_string(kMaxColors) + "]");
}

// Iterative deepening on the weight, from the root bound up to a greedy
// upper bound. The first round that finds a labeling is optimal.
RainbowLabeling deepen(const Graph& g, int k, bool all_colors, detail::NodeCounter& counter) {
  const detail::BitGraph bg(g);
  RainbowSearch search(bg, k, counter);
  search.require_all_colors(all_colors);
  const LabelState root = search.initial_state();

  const detail::Mask greedy = detail::greedy_cover(bg.closed, bg.all, bg.all);
  int upper = k * detail::count(greedy);
  if (!all_colors) upper = std::min(upper, bg.n);
  int lower = std::max(1, search.lower_bound(root));
  if (all_colors) lower = std::max(lower, k);

  std::optional<LabelState> found;
  const RainbowSearch::Visitor take_first = [&](const LabelState& s) {
    found = s;
    return true;
  };
  for (int target = lower; target <= upper; ++target) {
    if (search.search(root, target, take_first)) return search.to_labeling(*found);
  }
  throw Error(ErrorCode::InvalidArgument, "no labeling found up to the greedy bound");
}

RainbowLabeling merge(int k, int order, const std::vector<detail::ComponentView>& parts,
                      const std::vector<RainbowLabeling>& labels) {
  RainbowLabeling f(k, order);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v = 0; v < labels[i].order(); ++v) f.set(parts[i].original[v], labels[i][v]);
  return f;
}

}  // namespace

RainbowResult min_rainbow(const Graph& g, int k, const SolverOptions& options) {
  check_k(k);
  detail::check_component_capacity(g);
  detail::NodeCounter counter(options.node_budget);
  const auto parts = detail::split_components(g);
  std::vector<RainbowLabeling> labels;
  for (const auto& part : parts) labels.push_back(deepen(part.graph, k, false, counter));
  RainbowResult result;
  result.witness = merge(k, g.order(), parts, labels);
  result.value = result.witness.weight();
  result.nodes_explored = counter.nodes();
  return result;
}

RainbowResult min_rainbow_via_cartesian(const Graph& g, int k, const SolverOptions& options) {
  check_k(k);
  detail::check_component_capacity(g, k);
  const auto product = cartesian(g, gen_complete(k));
  const SetResult ds = min_dominating_set(product.graph, options);
  RainbowResult result;
  result.witness = dominating_set_to_rdf(g, k, ds.witness);
  result.value = ds.value;
  result.nodes_explored = ds.nodes_explored;
  return result;
}

RainbowResult min_rainbow_all_colors(const Graph& g, int k, const SolverOptions& options) {
  check_k(k);
  if (g.order() < k)
    throw Error(ErrorCode::HTooSmall, "need at least k vertices to use all k colors");
  detail::NodeCounter counter(options.node_budget);
  RainbowResult result;
  result.witness = deepen(g, k, true, counter);
  result.value = result.witness.weight();
  result.nodes_explored = counter.nodes();
  return result;
}

Enumeration enumerate_min_rdfs(const Graph& g, int k, std::size_t cap, const SolverOptions& options) {
  check_k(k);
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "enumeration cap must be positive");
  Enumeration out;
  out.weight = min_rainbow(g, k, options).value;
  if (g.order() == 0) {
    out.labelings.emplace_back(k, 0);
    return out;
  }
  const detail::BitGraph bg(g);
  detail::NodeCounter counter(options.node_budget);
  RainbowSearch search(bg, k, counter);
  const RainbowSearch::Visitor collect = [&](const LabelState& s) {
    if (out.labelings.size() == cap) {
      out.complete = false;
      return true;
    }
    out.labelings.push_back(search.to_labeling(s));
    return false;
  };
  search.search(search.initial_state(), out.weight, collect);
  std::sort(out.labelings.begin(), out.labelings.end());
  return out;
}

std::optional<PairWitness> pair_witness(const Graph& h, const SolverOptions& options) {
  const int gamma = min_rainbow(h, 2, options).value;
  if (h.order() == 0) return std::nullopt;
  const detail::BitGraph bg(h);
  detail::NodeCounter counter(options.node_budget);
  RainbowSearch search(bg, 2, counter);
  const std::uint8_t both = ColorSet::full(2).bits();

  std::optional<LabelState> found;
  const RainbowSearch::Visitor take_first = [&](const LabelState& s) {
    found = s;
    return true;
  };
  for (Vertex u = 0; u < h.order(); ++u) {
    LabelState s = search.initial_state();
    for (Vertex w = 0; w < u; ++w) s.forbid_full |= detail::bit(w);
    search.assign(s, u, both);
    if (!search.search(s, gamma, take_first)) continue;

    PairWitness witness;
    witness.u = u;
    witness.labeling = search.to_labeling(*found);
    if (witness.labeling.weight() != gamma) continue;
    if (gamma == 3) {
      for (Vertex v = 0; v < h.order(); ++v) {
        if (v != u && !witness.labeling[v].empty()) witness.v = v;
      }
      if (witness.v && witness.labeling[*witness.v] == ColorSet::of({2})) {
        RainbowLabeling swapped(2, h.order());
        for (Vertex v = 0; v < h.order(); ++v) {
          const auto bits = witness.labeling[v].bits();
          swapped.set(v, ColorSet::from_bits(static_cast<std::uint8_t>(((bits & 1) << 1) | ((bits >> 1) & 1))));
        }
        witness.labeling = swapped;
      }
    }
    return witness;
  }
  return std::nullopt;
}

}  // namespace rainbowdom
