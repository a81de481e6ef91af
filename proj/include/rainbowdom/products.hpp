#pragma once

#include "rainbowdom/graph.hpp"

namespace rainbowdom {

/// Row-major bijection between V(G) x V(H) and 0..nG*nH-1: (g,h) -> g*nH + h.
class ProductIndex {
 public:
  ProductIndex() = default;
  ProductIndex(int g_order, int h_order);

  int g_order() const noexcept { return g_order_; }
  int h_order() const noexcept { return h_order_; }
  int order() const noexcept { return g_order_ * h_order_; }

  Vertex encode(Vertex g, Vertex h) const;
  std::pair<Vertex, Vertex> decode(Vertex v) const;

  friend bool operator==(const ProductIndex&, const ProductIndex&) = default;

 private:
  int g_order_ = 0;
  int h_order_ = 0;
};

struct ProductGraph {
  Graph graph;
  ProductIndex index;
};

/// (g1,h1) ~ (g2,h2) iff g1g2 in E(G), or g1 = g2 and h1h2 in E(H).
ProductGraph lexicographic(const Graph& g, const Graph& h);

/// (g1,h1) ~ (g2,h2) iff one coordinate is equal and the other adjacent.
ProductGraph cartesian(const Graph& g, const Graph& h);

/// The H-layer above g: {(g,h) : h in V(H)}.
VertexSet h_layer(const ProductIndex& index, Vertex g);
/// The G-layer at h: {(g,h) : g in V(G)}.
VertexSet g_layer(const ProductIndex& index, Vertex h);

VertexSet project_g(const ProductIndex& index, const VertexSet& s);
VertexSet project_h(const ProductIndex& index, const VertexSet& s);

}  // namespace rainbowdom
