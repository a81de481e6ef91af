#include <algorithm>
#include <map>
#include <set>

#include "rainbowdom/graph.hpp"

namespace rainbowdom {

namespace {

using Code = std::vector<bool>;

// Vertex invariant used to split the search over relabelings: degree, then
// the sorted degrees of the neighbours.
std::vector<int> vertex_key(const Graph& g, Vertex v) {
  std::vector<int> key{g.degree(v)};
  for (Vertex u : g.neighbors(v)) key.push_back(g.degree(u));
  std::sort(key.begin() + 1, key.end(), std::greater<>());
  return key;
}

struct Canonicalizer {
  const Graph& g;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<Vertex>> classes;
  std::vector<Vertex> order;
  Code best;
  std::vector<Vertex> best_order;

  explicit Canonicalizer(const Graph& graph) : g(graph) {
    const int n = g.order();
    adj.assign(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

    std::map<std::vector<int>, std::vector<Vertex>, std::greater<>> by_key;
    for (Vertex v = 0; v < n; ++v) by_key[vertex_key(g, v)].push_back(v);
    for (auto& [key, members] : by_key) classes.push_back(members);
  }

  Code code_of(const std::vector<Vertex>& perm) const {
    Code code;
    const int n = static_cast<int>(perm.size());
    code.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code.push_back(adj[perm[i]][perm[j]]);
    return code;
  }

  void search(std::size_t class_index) {
    if (class_index == classes.size()) {
      Code code = code_of(order);
      if (best_order.empty() || code < best) {
        best = std::move(code);
        best_order = order;
      }
      return;
    }
    auto members = classes[class_index];
    std::sort(members.begin(), members.end());
    do {
      const auto mark = order.size();
      order.insert(order.end(), members.begin(), members.end());
      search(class_index + 1);
      order.resize(mark);
    } while (std::next_permutation(members.begin(), members.end()));
  }

  void run() {
    if (g.order() > kMaxCanonicalOrder)
      throw Error(ErrorCode::TooLarge, "canonical form limited to order " +
                                           std::to_string(kMaxCanonicalOrder));
    search(0);
  }
};

}  // namespace

std::vector<bool> canonical_code(const Graph& g) {
  Canonicalizer c(g);
  c.run();
  return c.best;
}

Graph canonical_form(const Graph& g) {
  Canonicalizer c(g);
  c.run();
  std::vector<int> position(g.order());
  for (int i = 0; i < g.order(); ++i) position[c.best_order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph::from_edge_list(g.order(), edges);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "enumeration needs n >= 1");
  if (n > 7) throw Error(ErrorCode::TooLarge, "enumeration limited to n <= 7");
  if (n == 1) return {Graph(1)};

  // Every connected graph has a non-cut vertex, so each class on n vertices
  // arises from a class on n-1 vertices plus one new vertex.
  std::set<Code> seen;
  std::vector<std::pair<Code, Graph>> found;
  for (const Graph& base : enumerate_connected_graphs(n - 1)) {
    const auto base_edges = base.edges();
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = base_edges;
      for (Vertex v = 0; v < n - 1; ++v)
        if (mask & (1u << v)) edges.emplace_back(v, n - 1);
      Graph candidate = Graph::from_edge_list(n, edges);
      Code code = canonical_code(candidate);
      if (seen.insert(code).second) found.emplace_back(std::move(code), canonical_form(candidate));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace rainbowdom
