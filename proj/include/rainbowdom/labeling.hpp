#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowdom/graph.hpp"
#include "rainbowdom/products.hpp"

namespace rainbowdom {

inline constexpr int kMaxColors = 8;

/// Subset of [k] = {1..k}; color c is bit c-1.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  static constexpr ColorSet from_bits(std::uint8_t bits) { return ColorSet(bits); }
  static ColorSet full(int k);
  static ColorSet of(std::initializer_list<int> colors);

  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  bool contains(int color) const noexcept;
  /// Largest color present, 0 when empty.
  int max_color() const noexcept;

  constexpr ColorSet operator|(ColorSet o) const noexcept { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const noexcept { return ColorSet(bits_ & o.bits_); }
  ColorSet& operator|=(ColorSet o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }

  /// "{1,2}" or "-" for the empty set.
  std::string to_string() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit ColorSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

/// f : V -> 2^[k], one label per vertex.
class RainbowLabeling {
 public:
  RainbowLabeling() = default;
  /// All labels empty.
  RainbowLabeling(int k, int order);
  RainbowLabeling(int k, std::vector<ColorSet> labels);

  int k() const noexcept { return k_; }
  int order() const noexcept { return static_cast<int>(labels_.size()); }
  ColorSet operator[](Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  void set(Vertex v, ColorSet label);
  const std::vector<ColorSet>& labels() const noexcept { return labels_; }

  /// ||f||, the sum of label sizes.
  int weight() const noexcept;
  /// Union of all labels.
  ColorSet colors_used() const noexcept;

  friend bool operator==(const RainbowLabeling&, const RainbowLabeling&) = default;
  friend auto operator<=>(const RainbowLabeling&, const RainbowLabeling&) = default;

 private:
  int k_ = 1;
  std::vector<ColorSet> labels_;
};

struct RdfCheck {
  bool valid = false;
  /// Lowest-index vertex whose requirement fails.
  std::optional<Vertex> violator;
  explicit operator bool() const noexcept { return valid; }
};

RdfCheck is_k_rainbow_dominating(const Graph& g, const RainbowLabeling& f);

std::map<ColorSet, VertexSet> induced_partition(const RainbowLabeling& f);

/// D_f = {(v,i) : i in f(v)} as vertices of cartesian(G, K_k), i.e. v*k + i-1.
VertexSet rdf_to_dominating_set(const Graph& g, const RainbowLabeling& f);
RainbowLabeling dominating_set_to_rdf(const Graph& g, int k, const VertexSet& d);

/// Sum of |f(g,h)| over the H-layer above g.
int layer_contribution(const ProductIndex& index, const RainbowLabeling& f, Vertex g);

/// Text format: one line per vertex, "v: {i,j}" or "v: -". Lines starting
/// with '#' are comments.
std::string format_labeling(const RainbowLabeling& f);
RainbowLabeling parse_labeling(std::string_view text, int k);

}  // namespace rainbowdom
