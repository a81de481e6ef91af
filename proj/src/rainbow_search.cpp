#include "rainbow_search.hpp"

#include <algorithm>
#include <cmath>

namespace rainbowdom::detail {

namespace {

constexpr double kEps = 1e-9;

}  // namespace

RainbowSearch::RainbowSearch(const BitGraph& g, int k, NodeCounter& counter)
    : g_(g), k_(k), full_(ColorSet::full(k).bits()), counter_(counter) {}

LabelState RainbowSearch::initial_state() const {
  LabelState s;
  s.label.fill(-1);
  s.allowed.fill(full_);
  s.seen.fill(0);
  s.undecided = g_.all;
  return s;
}

void RainbowSearch::assign(LabelState& s, int v, std::uint8_t label) const {
  s.label[v] = label;
  s.undecided &= ~bit(v);
  s.weight += std::popcount(label);
  if (label) for_each_bit(g_.open[v], [&](int w) { s.seen[w] |= label; });
}

RainbowLabeling RainbowSearch::to_labeling(const LabelState& s) const {
  RainbowLabeling f(k_, g_.n);
  for (int v = 0; v < g_.n; ++v)
    if (s.label[v] > 0) f.set(v, ColorSet::from_bits(static_cast<std::uint8_t>(s.label[v])));
  return f;
}

Mask RainbowSearch::unsatisfied(const LabelState& s) const {
  Mask out = 0;
  for (int v = 0; v < g_.n; ++v)
    if (s.label[v] <= 0 && s.seen[v] != full_) out |= bit(v);
  return out;
}

Mask RainbowSearch::usable(const LabelState& s) const {
  Mask out = 0;
  for_each_bit(s.undecided, [&](int u) {
    const std::uint8_t a = s.allowed[u];
    if (!a) return;
    if (k_ == 1 && (s.forbid_full & bit(u))) return;
    out |= bit(u);
  });
  return out;
}

// Each unsatisfied vertex x still needs d(x) color units placed inside its
// neighbourhood: one if x may take a label itself, otherwise one per missing
// color. A unit placed on u serves at most |N[u] ∩ unsat| such vertices, so
// sum d(x) / max_u |N[u] ∩ unsat| bounds the remaining weight.
double RainbowSearch::bound(const LabelState& s, Mask unsat, Mask usable_mask) const {
  double total = 0;
  Mask rest = unsat;
  while (rest) {
    const int x = lowest(rest);
    rest &= rest - 1;
    Mask candidates;
    int demand;
    if ((s.undecided & bit(x)) && (usable_mask & bit(x))) {
      candidates = g_.closed[x] & usable_mask;
      demand = 1;
    } else {
      candidates = g_.open[x] & usable_mask;
      const std::uint8_t missing = full_ & ~s.seen[x];
      std::uint8_t reachable = 0;
      for_each_bit(candidates, [&](int u) { reachable |= s.allowed[u]; });
      if ((reachable & missing) != missing) return -1;
      demand = std::popcount(missing);
    }
    if (!candidates) return -1;
    int best = 0;
    for_each_bit(candidates, [&](int u) { best = std::max(best, count(g_.closed[u] & unsat)); });
    total += static_cast<double>(demand) / best;
  }
  return total;
}

int RainbowSearch::lower_bound(const LabelState& s) const {
  const Mask unsat = unsatisfied(s);
  const double b = bound(s, unsat, usable(s));
  if (b < 0) return -1;
  return static_cast<int>(std::ceil(b - kEps));
}

bool RainbowSearch::search(const LabelState& s, int max_weight, const Visitor& visit) {
  visit_ = &visit;
  return dfs(s, max_weight);
}

bool RainbowSearch::dfs(const LabelState& s, int max_weight) {
  counter_.tick();
  const Mask unsat = unsatisfied(s);
  std::uint8_t used = 0;
  if (require_all_colors_)
    for (int v = 0; v < g_.n; ++v)
      if (s.label[v] > 0) used |= static_cast<std::uint8_t>(s.label[v]);

  if (!unsat) {
    if (require_all_colors_ && used != full_) return branch_missing_color(s, max_weight);
    return (*visit_)(s);
  }
  const int remaining = max_weight - s.weight;
  if (remaining <= 0) return false;
  if (require_all_colors_ && std::popcount(static_cast<std::uint8_t>(full_ & ~used)) > remaining)
    return false;
  const Mask usable_mask = usable(s);
  const double lb = bound(s, unsat, usable_mask);
  if (lb < 0 || lb > remaining + kEps) return false;

  const int v = lowest(unsat);
  if (!(s.undecided & bit(v))) return branch_on_neighbours(s, v, max_weight);

  // v takes a nonempty label ...
  if (usable_mask & bit(v)) {
    const bool no_full = (s.forbid_full & bit(v)) != 0;
    for (unsigned label = 1; label <= full_; ++label) {
      if (label & ~s.allowed[v]) continue;
      if (no_full && label == full_) continue;
      if (std::popcount(label) > remaining) continue;
      LabelState child = s;
      assign(child, v, static_cast<std::uint8_t>(label));
      if (dfs(child, max_weight)) return true;
    }
  }
  // ... or stays empty and a neighbour must supply a missing color.
  LabelState empty = s;
  empty.label[v] = 0;
  empty.undecided &= ~bit(v);
  return branch_on_neighbours(empty, v, max_weight);
}

bool RainbowSearch::branch_on_neighbours(LabelState s, int v, int max_weight) {
  const std::uint8_t missing = full_ & ~s.seen[v];
  const int remaining = max_weight - s.weight;
  const Mask candidates = g_.open[v] & usable(s);
  Mask rest = candidates;
  while (rest) {
    const int u = lowest(rest);
    rest &= rest - 1;
    const bool no_full = (s.forbid_full & bit(u)) != 0;
    for (unsigned label = 1; label <= full_; ++label) {
      if (label & ~s.allowed[u]) continue;
      if (!(label & missing)) continue;
      if (no_full && label == full_) continue;
      if (std::popcount(label) > remaining) continue;
      LabelState child = s;
      assign(child, u, static_cast<std::uint8_t>(label));
      if (dfs(child, max_weight)) return true;
    }
    // Later siblings: u contributes none of the missing colors.
    s.allowed[u] &= static_cast<std::uint8_t>(~missing);
  }
  return false;
}

bool RainbowSearch::branch_missing_color(LabelState s, int max_weight) {
  const int remaining = max_weight - s.weight;
  if (remaining <= 0) return false;
  std::uint8_t used = 0;
  for (int v = 0; v < g_.n; ++v)
    if (s.label[v] > 0) used |= static_cast<std::uint8_t>(s.label[v]);
  const std::uint8_t color = static_cast<std::uint8_t>((full_ & ~used) & -(full_ & ~used));
  Mask rest = usable(s);
  while (rest) {
    const int u = lowest(rest);
    rest &= rest - 1;
    if (!(s.allowed[u] & color)) continue;
    const bool no_full = (s.forbid_full & bit(u)) != 0;
    for (unsigned label = 1; label <= full_; ++label) {
      if (label & ~s.allowed[u]) continue;
      if (!(label & color)) continue;
      if (no_full && label == full_) continue;
      if (std::popcount(label) > remaining) continue;
      LabelState child = s;
      assign(child, u, static_cast<std::uint8_t>(label));
      if (dfs(child, max_weight)) return true;
    }
    s.allowed[u] &= static_cast<std::uint8_t>(~color);
  }
  return false;
}

}  // namespace rainbowdom::detail
