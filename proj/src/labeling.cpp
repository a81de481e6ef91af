#include "rainbowdom/labeling.hpp"

#include <bit>
#include <sstream>

namespace rainbowdom {

namespace {

void check_k(int k) {
  if (k < 1 || k > kMaxColors)
    throw Error(ErrorCode::InvalidArgument, "k must be in [1," + std::to_string(kMaxColors) + "]");
}

}  // namespace

ColorSet ColorSet::full(int k) {
  check_k(k);
  return ColorSet(static_cast<std::uint8_t>((1u << k) - 1));
}

ColorSet ColorSet::of(std::initializer_list<int> colors) {
  std::uint8_t bits = 0;
  for (int c : colors) {
    if (c < 1 || c > kMaxColors) throw Error(ErrorCode::InvalidArgument, "color out of range");
    bits |= static_cast<std::uint8_t>(1u << (c - 1));
  }
  return ColorSet(bits);
}

int ColorSet::size() const noexcept { return std::popcount(bits_); }

bool ColorSet::contains(int color) const noexcept {
  return color >= 1 && color <= kMaxColors && ((bits_ >> (color - 1)) & 1);
}

int ColorSet::max_color() const noexcept { return std::bit_width(bits_); }

std::string ColorSet::to_string() const {
  if (empty()) return "-";
  std::string out = "{";
  bool first = true;
  for (int c = 1; c <= kMaxColors; ++c) {
    if (!contains(c)) continue;
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

RainbowLabeling::RainbowLabeling(int k, int order) : k_(k) {
  check_k(k);
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  labels_.assign(static_cast<std::size_t>(order), ColorSet{});
}

RainbowLabeling::RainbowLabeling(int k, std::vector<ColorSet> labels) : k_(k), labels_(std::move(labels)) {
  check_k(k);
  for (ColorSet c : labels_)
    if (c.max_color() > k) throw Error(ErrorCode::InvalidArgument, "label exceeds [k]");
}

void RainbowLabeling::set(Vertex v, ColorSet label) {
  if (v < 0 || v >= order()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  if (label.max_color() > k_) throw Error(ErrorCode::InvalidArgument, "label exceeds [k]");
  labels_[static_cast<std::size_t>(v)] = label;
}

int RainbowLabeling::weight() const noexcept {
  int total = 0;
  for (ColorSet c : labels_) total += c.size();
  return total;
}

ColorSet RainbowLabeling::colors_used() const noexcept {
  ColorSet out;
  for (ColorSet c : labels_) out |= c;
  return out;
}

RdfCheck is_k_rainbow_dominating(const Graph& g, const RainbowLabeling& f) {
  if (f.order() != g.order())
    throw Error(ErrorCode::InvalidArgument, "labeling order " + std::to_string(f.order()) +
                                                " does not match graph order " +
                                                std::to_string(g.order()));
  const ColorSet all = ColorSet::full(f.k());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!f[v].empty()) continue;
    ColorSet seen;
    for (Vertex u : g.neighbors(v)) seen |= f[u];
    if (seen != all) return {false, v};
  }
  return {true, std::nullopt};
}

std::map<ColorSet, VertexSet> induced_partition(const RainbowLabeling& f) {
  std::map<ColorSet, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < f.order(); ++v) groups[f[v]].push_back(v);
  std::map<ColorSet, VertexSet> out;
  for (auto& [label, members] : groups) out.emplace(label, VertexSet(std::move(members)));
  return out;
}

VertexSet rdf_to_dominating_set(const Graph& g, const RainbowLabeling& f) {
  if (const auto check = is_k_rainbow_dominating(g, f); !check)
    throw Error(ErrorCode::NotValidRdf, "vertex " + std::to_string(*check.violator) +
                                            " misses a color");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    for (int c = 1; c <= f.k(); ++c)
      if (f[v].contains(c)) out.push_back(v * f.k() + (c - 1));
  return VertexSet(std::move(out));
}

RainbowLabeling dominating_set_to_rdf(const Graph& g, int k, const VertexSet& d) {
  const auto product = cartesian(g, gen_complete(k));
  product.graph.check_set(d);
  if (!is_dominating_set(product.graph, d))
    throw Error(ErrorCode::NotDominating, "set does not dominate G x K_k");
  RainbowLabeling f(k, g.order());
  for (Vertex x : d) {
    const auto [v, i] = product.index.decode(x);
    f.set(v, f[v] | ColorSet::of({i + 1}));
  }
  return f;
}

int layer_contribution(const ProductIndex& index, const RainbowLabeling& f, Vertex g) {
  if (f.order() != index.order())
    throw Error(ErrorCode::InvalidArgument, "labeling is not defined on this product");
  int total = 0;
  for (Vertex v : h_layer(index, g)) total += f[v].size();
  return total;
}

std::string format_labeling(const RainbowLabeling& f) {
  std::ostringstream out;
  for (Vertex v = 0; v < f.order(); ++v) out << v << ": " << f[v].to_string() << '\n';
  return out.str();
}

RainbowLabeling parse_labeling(std::string_view text, int k) {
  check_k(k);
  std::map<Vertex, ColorSet> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::MalformedInput, "labeling line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("missing ':'");
    Vertex v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(line.substr(0, colon), &used);
    } catch (const std::exception&) {
      fail("bad vertex index");
    }
    if (v < 0) fail("negative vertex index");
    std::string rest = line.substr(colon + 1);
    std::string compact;
    for (char c : rest)
      if (c != ' ' && c != '\t' && c != '\r') compact.push_back(c);
    ColorSet label;
    if (compact != "-") {
      if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') fail("bad label");
      std::istringstream items(compact.substr(1, compact.size() - 2));
      std::string item;
      std::uint8_t bits = 0;
      while (std::getline(items, item, ',')) {
        int c = 0;
        try {
          c = std::stoi(item);
        } catch (const std::exception&) {
          fail("bad color");
        }
        if (c < 1 || c > k) fail("color " + std::to_string(c) + " outside [k]");
        bits |= static_cast<std::uint8_t>(1u << (c - 1));
      }
      label = ColorSet::from_bits(bits);
    }
    if (!entries.emplace(v, label).second) fail("vertex listed twice");
  }
  std::vector<ColorSet> labels(entries.size());
  for (const auto& [v, label] : entries) {
    if (static_cast<std::size_t>(v) >= labels.size())
      throw Error(ErrorCode::MalformedInput, "labeling skips vertex indices");
    labels[static_cast<std::size_t>(v)] = label;
  }
  return RainbowLabeling(k, std::move(labels));
}

}  // namespace rainbowdom
