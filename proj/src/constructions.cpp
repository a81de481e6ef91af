#include "rainbowdom/constructions.hpp"

#include "rainbowdom/products.hpp"

namespace rainbowdom {

namespace {

// Rows as printed: u-row first, v-row second.
constexpr const char* kTileRows[][2] = {
    {"30", "10"},             // R_2
    {"030", "010"},           // R_3
    {"0330", "0000"},         // R_4
    {"02120", "01010"},       // R_5
    {"030030", "010010"},     // R_6
    {"0210210", "0100020"},   // R_7
    {"02102130", "01000200"}  // R_8
};

ColorSet digit(char c) {
  if (c < '0' || c > '3') throw Error(ErrorCode::MalformedInput, std::string("tile digit '") + c + "'");
  return ColorSet::from_bits(static_cast<std::uint8_t>(c - '0'));
}

void check_pair(const Graph& h, const PairWitness& pair) {
  const auto& f = pair.labeling;
  const bool ok = pair.v.has_value() && f.k() == 2 && f.order() == h.order() && pair.u >= 0 &&
                  pair.u < h.order() && *pair.v >= 0 && *pair.v < h.order() &&
                  f[pair.u] == ColorSet::of({1, 2}) && f[*pair.v] == ColorSet::of({1}) &&
                  f.weight() == 3 && is_k_rainbow_dominating(h, f).valid;
  if (!ok) throw Error(ErrorCode::NoPairWitness, "expected a weight-3 2-RDF with {1,2} at u and {1} at v");
}

}  // namespace

int PatternTile::weight() const {
  int total = 0;
  for (ColorSet c : u_row) total += c.size();
  for (ColorSet c : v_row) total += c.size();
  return total;
}

PatternTile PatternTile::parse(const std::string& u_digits, const std::string& v_digits) {
  if (u_digits.size() != v_digits.size() || u_digits.empty())
    throw Error(ErrorCode::MalformedInput, "tile rows must be nonempty and of equal length");
  PatternTile tile;
  tile.length = static_cast<int>(u_digits.size());
  for (char c : u_digits) tile.u_row.push_back(digit(c));
  for (char c : v_digits) tile.v_row.push_back(digit(c));
  return tile;
}

const std::map<int, PatternTile>& tiles() {
  static const std::map<int, PatternTile> table = [] {
    std::map<int, PatternTile> out;
    for (const auto& rows : kTileRows) {
      PatternTile tile = PatternTile::parse(rows[0], rows[1]);
      out.emplace(tile.length, std::move(tile));
    }
    return out;
  }();
  return table;
}

int path_upper_bound(int n) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "path bound needs n >= 2");
  const int t = n / 7;
  const int r = n % 7;
  return 6 * t + r + ((r == 1 || r == 2) ? 1 : 0);
}

std::vector<int> path_tiling(int n) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "path tiling needs n >= 2");
  if (n <= 8) return {n};
  const int t = n / 7;
  const int r = n % 7;
  std::vector<int> out;
  if (r == 0) {
    out.assign(static_cast<std::size_t>(t), 7);
  } else if (r == 1) {
    out.assign(static_cast<std::size_t>(t - 1), 7);
    out.push_back(8);
  } else {
    out.assign(static_cast<std::size_t>(t), 7);
    out.push_back(r);
  }
  return out;
}

RainbowLabeling path_pattern_labeling(int n, const Graph& h, const PairWitness& pair) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "path pattern needs n >= 2");
  check_pair(h, pair);
  const ProductIndex index(n, h.order());
  RainbowLabeling f(2, index.order());
  int column = 0;
  for (int length : path_tiling(n)) {
    const PatternTile& tile = tiles().at(length);
    for (int i = 0; i < length; ++i, ++column) {
      f.set(index.encode(column, pair.u), tile.u_row[i]);
      f.set(index.encode(column, *pair.v), tile.v_row[i]);
    }
  }
  return f;
}

RainbowLabeling total_dom_labeling(const Graph& g, const Graph& h, int k, const SolverOptions& options) {
  if (h.order() == 0) throw Error(ErrorCode::HTooSmall, "H is empty");
  const SetResult tds = min_total_dominating_set(g, options);
  const ProductIndex index(g.order(), h.order());
  RainbowLabeling f(k, index.order());
  for (Vertex d : tds.witness) f.set(index.encode(d, 0), ColorSet::full(k));
  return f;
}

RainbowLabeling universal_vertex_labeling(const Graph& g, const Graph& h, int k,
                                          const SolverOptions& options) {
  Vertex universal = -1;
  for (Vertex w = 0; w < h.order() && universal < 0; ++w)
    if (h.degree(w) == h.order() - 1) universal = w;
  if (universal < 0) throw Error(ErrorCode::NoUniversalVertex, "gamma(H) != 1");
  const SetResult ds = min_dominating_set(g, options);
  const ProductIndex index(g.order(), h.order());
  RainbowLabeling f(k, index.order());
  for (Vertex d : ds.witness) f.set(index.encode(d, universal), ColorSet::full(k));
  return f;
}

// The R_7 tile read outward from its second column: {2}/{1} on the centre,
// then a weight-4 block on each arm.
const GluedPattern& glued_pattern() {
  static const GluedPattern pattern{"2", "1", "10210", "00020"};
  return pattern;
}

RainbowLabeling glued_family_labeling(int m, int p2, const Graph& h, const PairWitness& pair) {
  const Graph g = gen_glued_paths(m, p2);
  check_pair(h, pair);
  const GluedPattern& p = glued_pattern();
  const ProductIndex index(g.order(), h.order());
  RainbowLabeling f(2, index.order());
  f.set(index.encode(0, pair.u), digit(p.center_u[0]));
  f.set(index.encode(0, *pair.v), digit(p.center_v[0]));
  for (int arm = 0; arm < m; ++arm) {
    for (int i = 0; i < 5; ++i) {
      const Vertex column = 1 + 5 * arm + i;
      f.set(index.encode(column, pair.u), digit(p.arm_u[i]));
      f.set(index.encode(column, *pair.v), digit(p.arm_v[i]));
    }
  }
  return f;
}

}  // namespace rainbowdom
