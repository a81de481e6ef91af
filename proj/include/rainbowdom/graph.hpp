#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbowdom/error.hpp"

namespace rainbowdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  /// "{0,2,5}"
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of the given order.
  explicit Graph(int order);

  /// Duplicated edges collapse; loops and out-of-range endpoints throw.
  static Graph from_edge_list(int order, std::span<const Edge> edges);
  static Graph from_edge_list(int order, std::initializer_list<Edge> edges) {
    return from_edge_list(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;
  void check_set(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Domination predicates.
bool is_dominating_set(const Graph& g, const VertexSet& s);
bool is_total_dominating_set(const Graph& g, const VertexSet& s);

/// N(S) and N[S].
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
int max_degree(const Graph& g);
bool has_isolated_vertex(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// Subgraph induced by `s`, vertices renumbered in increasing order of `s`.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Connected, order >= 2 (or 1), and every vertex has degree <= 2 with n-1 edges.
bool is_path(const Graph& g);

// graph6 interchange.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Named families. Path edges are (i, i+1); cycle adds (n-1, 0); star has
// centre 0 and leaves 1..n-1.
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_star(int n);

/// Two 4-cycles sharing vertex 0: 0-1-2-3-0 and 0-4-5-6-0.
Graph gen_double_c4();

/// Centre 0; arm i occupies vertices 1+5i..5+5i as a path hanging off the
/// centre; then p2 pendant vertices adjacent to the centre.
Graph gen_glued_paths(int m, int p2);

// Isomorphism utilities for small graphs (order <= kMaxCanonicalOrder).
inline constexpr int kMaxCanonicalOrder = 10;

/// Upper-triangle adjacency bits of the lexicographically smallest relabeling
/// among those that sort vertices by non-increasing degree.
std::vector<bool> canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 7), ordered by edge count then canonical code.
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace rainbowdom
