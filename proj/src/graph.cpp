#include "rainbowdom/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace rainbowdom {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NotValidRdf: return "NotValidRDF";
    case ErrorCode::NotDominating: return "NotDominating";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotDominatingCouple: return "NotDominatingCouple";
    case ErrorCode::HTooSmall: return "HTooSmall";
    case ErrorCode::NoPairWitness: return "NoPairWitness";
    case ErrorCode::NoUniversalVertex: return "NoUniversalVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : members_(members) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

Graph::Graph(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  adj_.resize(static_cast<std::size_t>(order));
}

Graph Graph::from_edge_list(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," +
                      std::to_string(order) + ")");
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = neighbors(u);
  check_vertex(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside [0," + std::to_string(order()) + ")");
}

void Graph::check_set(const VertexSet& s) const {
  for (Vertex v : s) check_vertex(v);
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  std::vector<bool> hit(g.order(), false);
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v)) hit[u] = true;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = open_neighborhood(g, s);
  for (Vertex v : s) out.insert(v);
  return out;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  return closed_neighborhood(g, s).size() == static_cast<std::size_t>(g.order());
}

bool is_total_dominating_set(const Graph& g, const VertexSet& s) {
  return open_neighborhood(g, s).size() == static_cast<std::size_t>(g.order());
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members;
    std::queue<Vertex> frontier;
    comp[s] = static_cast<int>(out.size());
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      members.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = comp[s];
          frontier.push(u);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  std::vector<int> position(g.order(), -1);
  int next = 0;
  for (Vertex v : s) position[v] = next++;
  std::vector<Edge> edges;
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (v < u && position[u] >= 0) edges.emplace_back(position[v], position[u]);
  return Graph::from_edge_list(next, edges);
}

bool is_path(const Graph& g) {
  if (g.order() == 0) return false;
  return is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order()) &&
         max_degree(g) <= 2;
}

}  // namespace rainbowdom
