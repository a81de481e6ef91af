// Brute-force reference implementations. They share nothing with the
// library solvers beyond Graph adjacency queries.
#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "rainbowdom/graph.hpp"

namespace oracle {

using rainbowdom::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

inline bool dominates(const std::vector<std::vector<bool>>& a, std::uint32_t s, bool total) {
  const int n = static_cast<int>(a.size());
  for (int x = 0; x < n; ++x) {
    bool ok = !total && (s >> x & 1u);
    for (int y = 0; y < n && !ok; ++y) ok = (s >> y & 1u) && a[x][y];
    if (!ok) return false;
  }
  return true;
}

inline int popcount(std::uint32_t s) { return __builtin_popcount(s); }

/// Minimum (total) dominating set size over all subsets; -1 if none.
inline int gamma(const Graph& g, bool total = false) {
  const auto a = matrix(g);
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
    if ((best < 0 || popcount(s) < best) && dominates(a, s, total)) best = popcount(s);
  return best;
}

/// labels[v] is a bitmask over colors 1..k (bit c-1).
inline bool rainbow_ok(const std::vector<std::vector<bool>>& a, const std::vector<int>& labels, int k) {
  const int n = static_cast<int>(a.size());
  const int full = (1 << k) - 1;
  for (int x = 0; x < n; ++x) {
    if (labels[x] != 0) continue;
    int seen = 0;
    for (int y = 0; y < n; ++y)
      if (a[x][y]) seen |= labels[y];
    if (seen != full) return false;
  }
  return true;
}

inline int weight(const std::vector<int>& labels) {
  int w = 0;
  for (int l : labels) w += popcount(static_cast<std::uint32_t>(l));
  return w;
}

/// Calls visit(labels) for every labeling V -> subsets of [k].
inline void for_each_labeling(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> labels(n, 0);
  const int base = 1 << k;
  while (true) {
    visit(labels);
    int i = 0;
    while (i < n && ++labels[i] == base) labels[i++] = 0;
    if (i == n) return;
  }
}

struct RainbowStats {
  int minimum = INT_MAX;
  int count = 0;  // labelings attaining the minimum
  bool pair = false;  // some minimum labeling has a full label
};

inline RainbowStats rainbow(const Graph& g, int k) {
  const auto a = matrix(g);
  RainbowStats st;
  const int full = (1 << k) - 1;
  for_each_labeling(g.order(), k, [&](const std::vector<int>& f) {
    const int w = weight(f);
    if (w > st.minimum || !rainbow_ok(a, f, k)) return;
    const bool has_full = std::find(f.begin(), f.end(), full) != f.end();
    if (w < st.minimum) st = {w, 0, false};
    st.count++;
    st.pair = st.pair || has_full;
  });
  return st;
}

/// min cost_a|A| + cost_b|B| over dominating couples, by 3^n enumeration.
inline int couple(const Graph& g, int cost_a, int cost_b) {
  const auto a = matrix(g);
  const int n = g.order();
  std::vector<int> role(n, 0);  // 0 none, 1 in A, 2 in B
  int best = INT_MAX;
  while (true) {
    int cost = 0;
    for (int r : role) cost += r == 1 ? cost_a : r == 2 ? cost_b : 0;
    if (cost < best) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        if (role[x] == 2) continue;
        bool seen = false;
        for (int y = 0; y < n && !seen; ++y) seen = a[x][y] && role[y] != 0;
        ok = seen;
      }
      if (ok) best = cost;
    }
    int i = 0;
    while (i < n && ++role[i] == 3) role[i++] = 0;
    if (i == n) break;
  }
  return best;
}

inline bool connected(const std::vector<std::vector<bool>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y)
      if (a[x][y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Minimum upper-triangle code over all n! relabelings.
inline std::vector<bool> canonical(const std::vector<std::vector<bool>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code.push_back(a[p[i]][p[j]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Number of isomorphism classes of connected graphs on n vertices, by
/// filtering every edge subset.
inline int count_connected(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> classes;
  for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (s >> e & 1u) a[pairs[e].first][pairs[e].second] = a[pairs[e].second][pairs[e].first] = true;
    if (connected(a)) classes.insert(canonical(a));
  }
  return static_cast<int>(classes.size());
}

/// Lexicographic product straight from the definition.
inline std::vector<std::vector<bool>> lex_matrix(const Graph& g, const Graph& h) {
  const int n = g.order() * h.order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (int g1 = 0; g1 < g.order(); ++g1)
    for (int h1 = 0; h1 < h.order(); ++h1)
      for (int g2 = 0; g2 < g.order(); ++g2)
        for (int h2 = 0; h2 < h.order(); ++h2)
          a[g1 * h.order() + h1][g2 * h.order() + h2] =
              g.adjacent(g1, g2) || (g1 == g2 && h.adjacent(h1, h2));
  return a;
}

}  // namespace oracle
