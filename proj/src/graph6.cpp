#include <cstdint>
#include <sstream>

#include "rainbowdom/graph.hpp"

namespace rainbowdom {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedGraph6, why); }

std::string encode_order(std::uint64_t n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
  }
  return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out = encode_order(n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) malformed("empty input");
  for (char c : text)
    if (c < 63 || c > 126) malformed("byte outside graph6 range");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take6 = [&](int count) {
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) malformed("truncated order field");
      v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - kBias);
    }
    return v;
  };
  if (text[0] != '~') {
    n = take6(1);
  } else if (text.size() >= 2 && text[1] == '~') {
    pos = 2;
    n = take6(6);
  } else {
    pos = 1;
    n = take6(3);
  }
  if (n > 1'000'000) malformed("order too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected_bytes = (bits + 5) / 6;
  if (text.size() - pos != expected_bytes)
    malformed("expected " + std::to_string(expected_bytes) + " edge bytes, found " +
              std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t bit_index = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit_index) {
      const int byte = text[pos + bit_index / 6] - kBias;
      if ((byte >> (5 - bit_index % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit_index % 6 != 0) {
    const int byte = text[pos + bit_index / 6] - kBias;
    const int pad = 6 - static_cast<int>(bit_index % 6);
    if ((byte & ((1 << pad) - 1)) != 0) malformed("nonzero padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw Error(ErrorCode::MalformedInput, "edge list must start with \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v))
      throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(m) + " edges, got " +
                                                 std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::MalformedInput, "trailing data after edge list");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace rainbowdom
