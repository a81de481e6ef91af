#include "rainbowdom/products.hpp"

namespace rainbowdom {

ProductIndex::ProductIndex(int g_order, int h_order) : g_order_(g_order), h_order_(h_order) {
  if (g_order < 0 || h_order < 0) throw Error(ErrorCode::InvalidArgument, "negative factor order");
}

Vertex ProductIndex::encode(Vertex g, Vertex h) const {
  if (g < 0 || g >= g_order_ || h < 0 || h >= h_order_)
    throw Error(ErrorCode::IndexOutOfRange,
                "pair (" + std::to_string(g) + "," + std::to_string(h) + ") outside product");
  return g * h_order_ + h;
}

std::pair<Vertex, Vertex> ProductIndex::decode(Vertex v) const {
  if (v < 0 || v >= order())
    throw Error(ErrorCode::IndexOutOfRange, "product vertex " + std::to_string(v));
  return {v / h_order_, v % h_order_};
}

ProductGraph lexicographic(const Graph& g, const Graph& h) {
  ProductIndex index(g.order(), h.order());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const auto& [x, y] : h.edges()) edges.emplace_back(index.encode(a, x), index.encode(a, y));
  }
  for (const auto& [a, b] : g.edges()) {
    for (Vertex x = 0; x < h.order(); ++x)
      for (Vertex y = 0; y < h.order(); ++y) edges.emplace_back(index.encode(a, x), index.encode(b, y));
  }
  return {Graph::from_edge_list(index.order(), edges), index};
}

ProductGraph cartesian(const Graph& g, const Graph& h) {
  ProductIndex index(g.order(), h.order());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a)
    for (const auto& [x, y] : h.edges()) edges.emplace_back(index.encode(a, x), index.encode(a, y));
  for (const auto& [a, b] : g.edges())
    for (Vertex x = 0; x < h.order(); ++x) edges.emplace_back(index.encode(a, x), index.encode(b, x));
  return {Graph::from_edge_list(index.order(), edges), index};
}

VertexSet h_layer(const ProductIndex& index, Vertex g) {
  std::vector<Vertex> out;
  for (Vertex h = 0; h < index.h_order(); ++h) out.push_back(index.encode(g, h));
  if (index.h_order() == 0 && (g < 0 || g >= index.g_order()))
    throw Error(ErrorCode::IndexOutOfRange, "layer index " + std::to_string(g));
  return VertexSet(std::move(out));
}

VertexSet g_layer(const ProductIndex& index, Vertex h) {
  std::vector<Vertex> out;
  for (Vertex g = 0; g < index.g_order(); ++g) out.push_back(index.encode(g, h));
  if (index.g_order() == 0 && (h < 0 || h >= index.h_order()))
    throw Error(ErrorCode::IndexOutOfRange, "layer index " + std::to_string(h));
  return VertexSet(std::move(out));
}

VertexSet project_g(const ProductIndex& index, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(index.decode(v).first);
  return VertexSet(std::move(out));
}

VertexSet project_h(const ProductIndex& index, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(index.decode(v).second);
  return VertexSet(std::move(out));
}

}  // namespace rainbowdom
