#include "rainbowdom/graph.hpp"

namespace rainbowdom {

namespace {

void require(bool ok, const char* family, int n, int minimum) {
  if (!ok)
    throw Error(ErrorCode::TooSmall, std::string(family) + " needs n >= " +
                                         std::to_string(minimum) + ", got " + std::to_string(n));
}

}  // namespace

Graph gen_path(int n) {
  require(n >= 1, "path", n, 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph gen_cycle(int n) {
  require(n >= 3, "cycle", n, 3);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph gen_complete(int n) {
  require(n >= 1, "complete graph", n, 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

Graph gen_star(int n) {
  require(n >= 2, "star", n, 2);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(n, edges);
}

Graph gen_double_c4() {
  return Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
}

Graph gen_glued_paths(int m, int p2) {
  if (m < 1) throw Error(ErrorCode::TooSmall, "glued paths need m >= 1");
  if (p2 < 0) throw Error(ErrorCode::TooSmall, "glued paths need p2 >= 0");
  const int n = 1 + 5 * m + p2;
  std::vector<Edge> edges;
  for (int arm = 0; arm < m; ++arm) {
    const Vertex first = 1 + 5 * arm;
    edges.emplace_back(0, first);
    for (Vertex v = first; v < first + 4; ++v) edges.emplace_back(v, v + 1);
  }
  for (Vertex leaf = 1 + 5 * m; leaf < n; ++leaf) edges.emplace_back(0, leaf);
  return Graph::from_edge_list(n, edges);
}

}  // namespace rainbowdom
